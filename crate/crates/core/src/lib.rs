//! Hierarchical Bayesian renewal-equation model of intervention effects on
//! epidemic transmission.
//!
//! The library turns daily death counts and intervention start dates into
//! posterior distributions over time-varying reproduction numbers,
//! intervention effects, and latent infections. Everything needed for
//! inference is built in: a taped reverse-mode gradient engine
//! ([`graddiff`]), the log-densities and delay-distribution machinery
//! ([`stats`]), the deterministic forward model ([`epimodel`]), the joint
//! log-posterior ([`posterior`]), an adaptive multinomial NUTS sampler
//! ([`sampler`]), CSV ingestion ([`dataio`]), and the command-line pipeline
//! ([`cli`]).

pub mod cli;
pub mod dataio;
pub mod epimodel;
pub mod graddiff;
pub mod posterior;
pub mod sampler;
pub mod special;
pub mod stats;
