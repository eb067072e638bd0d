//! Reverse-mode automatic differentiation over an append-only tape.
//!
//! The log-posterior is a scalar function of a few dozen inputs, evaluated
//! hundreds of thousands of times by the sampler. Each evaluation records
//! elementary operations on a [`Tape`]; one reverse sweep ([`Tape::gradient`])
//! then yields the exact gradient with respect to every input at a constant
//! multiple of the forward cost.
//!
//! Operations are expressed through the [`Real`] trait, implemented both by
//! plain `f64` (value-only evaluation) and by [`Var`] (taped evaluation), so
//! the same model code serves simulation and differentiation.

use std::cell::RefCell;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::special::{digamma, lgamma};

/// Elementary operation kinds recorded on the tape.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OpKind {
    Input,
    Const,
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Exp,
    Ln,
    Log1p,
    Lgamma,
    Square,
    Sqrt,
    /// x^c for a fixed exponent c.
    PowConst(f64),
    /// x + c for a fixed offset c.
    AddConst(f64),
    /// x * c for a fixed factor c.
    MulConst(f64),
    /// Sum of a sequence of tape variables.
    Sum,
    /// Dot product of two sequences of tape variables.
    Dot,
    /// Dot product of tape variables with fixed weights.
    DotConst,
    /// Identity of the operand chosen by a constant mask.
    Select,
}

impl OpKind {
    fn name(self) -> &'static str {
        match self {
            OpKind::Input => "input",
            OpKind::Const => "const",
            OpKind::Add => "add",
            OpKind::Sub => "sub",
            OpKind::Mul => "mul",
            OpKind::Div => "div",
            OpKind::Neg => "neg",
            OpKind::Exp => "exp",
            OpKind::Ln => "ln",
            OpKind::Log1p => "log1p",
            OpKind::Lgamma => "lgamma",
            OpKind::Square => "square",
            OpKind::Sqrt => "sqrt",
            OpKind::PowConst(_) => "pow_const",
            OpKind::AddConst(_) => "add_const",
            OpKind::MulConst(_) => "mul_const",
            OpKind::Sum => "sum",
            OpKind::Dot => "dot",
            OpKind::DotConst => "dot_const",
            OpKind::Select => "select",
        }
    }
}

/// A domain violation observed while recording or replaying (log of a
/// non-positive value, division by zero, and so on). The first violation per
/// evaluation is kept; the value it was fed is retained for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DomainFault {
    pub kind: &'static str,
    pub value: f64,
}

impl fmt::Display for DomainFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} of {}", self.kind, self.value)
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum GradError {
    #[error("domain error: {0}")]
    Domain(DomainFault),
    #[error("variable does not belong to this tape")]
    ForeignVariable,
    #[error("objective value is not finite ({0})")]
    NonFinite(f64),
    #[error("tape has {expected} inputs, {got} values supplied")]
    InputLen { expected: usize, got: usize },
}

#[derive(Clone, Copy)]
struct Node {
    value: f64,
    kind: OpKind,
    dep_start: u32,
    dep_len: u32,
}

struct TapeInner {
    nodes: Vec<Node>,
    /// Flat (operand index, local partial) records, indexed by each node's
    /// `dep_start..dep_start+dep_len`. Operand indices are always smaller
    /// than the owning node's index, so one reverse pass suffices.
    deps: Vec<(u32, f64)>,
    input_nodes: Vec<u32>,
    fault: Option<DomainFault>,
    adjoint: Vec<f64>,
}

/// Append-only record of one scalar computation.
///
/// A tape is single-threaded while recording and sweeping but may be moved
/// between threads between uses; each sampler chain owns one.
pub struct Tape {
    inner: RefCell<TapeInner>,
}

impl Default for Tape {
    fn default() -> Self {
        Self::new()
    }
}

/// A value recorded on a tape. Copyable handle: the `value` is the forward
/// value at record time, `idx` the node index.
#[derive(Clone, Copy)]
pub struct Var<'t> {
    value: f64,
    idx: u32,
    tape: &'t Tape,
}

impl fmt::Debug for Var<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Var(#{} = {})", self.idx, self.value)
    }
}

impl Tape {
    pub fn new() -> Self {
        Tape {
            inner: RefCell::new(TapeInner {
                nodes: Vec::new(),
                deps: Vec::new(),
                input_nodes: Vec::new(),
                fault: None,
                adjoint: Vec::new(),
            }),
        }
    }

    /// Drop every recorded node but keep allocated capacity. Used by the
    /// sampler to rebuild the objective once per evaluation without
    /// reallocating.
    pub fn clear(&self) {
        let mut t = self.inner.borrow_mut();
        t.nodes.clear();
        t.deps.clear();
        t.input_nodes.clear();
        t.fault = None;
    }

    pub fn input_count(&self) -> usize {
        self.inner.borrow().input_nodes.len()
    }

    pub fn node_count(&self) -> usize {
        self.inner.borrow().nodes.len()
    }

    /// The first domain violation recorded since the last `clear`, if any.
    pub fn fault(&self) -> Option<DomainFault> {
        self.inner.borrow().fault
    }

    /// Registers a differentiable input. Its gradient with respect to itself
    /// is 1.
    pub fn input(&self, value: f64) -> Var<'_> {
        let mut t = self.inner.borrow_mut();
        let idx = t.nodes.len() as u32;
        let dep_start = t.deps.len() as u32;
        t.nodes.push(Node {
            value,
            kind: OpKind::Input,
            dep_start,
            dep_len: 0,
        });
        t.input_nodes.push(idx);
        Var {
            value,
            idx,
            tape: self,
        }
    }

    /// Records a constant; constants keep their value across replays and
    /// receive no adjoint.
    pub fn constant(&self, value: f64) -> Var<'_> {
        let idx = self.push_node(value, OpKind::Const, &[]);
        Var {
            value,
            idx,
            tape: self,
        }
    }

    fn push_node(&self, value: f64, kind: OpKind, deps: &[(u32, f64)]) -> u32 {
        let mut t = self.inner.borrow_mut();
        let idx = t.nodes.len() as u32;
        let dep_start = t.deps.len() as u32;
        t.deps.extend_from_slice(deps);
        t.nodes.push(Node {
            value,
            kind,
            dep_start,
            dep_len: deps.len() as u32,
        });
        idx
    }

    fn note_fault(&self, kind: &'static str, value: f64) {
        let mut t = self.inner.borrow_mut();
        if t.fault.is_none() {
            t.fault = Some(DomainFault { kind, value });
        }
    }

    fn var(&self, value: f64, idx: u32) -> Var<'_> {
        Var {
            value,
            idx,
            tape: self,
        }
    }

    fn unary(&self, kind: OpKind, x: Var<'_>, value: f64, partial: f64) -> Var<'_> {
        debug_assert!(std::ptr::eq(x.tape, self));
        let idx = self.push_node(value, kind, &[(x.idx, partial)]);
        self.var(value, idx)
    }

    /// Sum of a non-empty sequence.
    pub fn sum<'t>(&'t self, xs: &[Var<'t>]) -> Var<'t> {
        assert!(!xs.is_empty(), "sum of empty sequence");
        let value = xs.iter().map(|v| v.value).sum();
        let mut t = self.inner.borrow_mut();
        let idx = t.nodes.len() as u32;
        let dep_start = t.deps.len() as u32;
        t.deps.extend(xs.iter().map(|v| (v.idx, 1.0)));
        t.nodes.push(Node {
            value,
            kind: OpKind::Sum,
            dep_start,
            dep_len: xs.len() as u32,
        });
        drop(t);
        self.var(value, idx)
    }

    /// Dot product of two equal-length non-empty sequences of tape values.
    pub fn dot<'t>(&'t self, a: &[Var<'t>], b: &[Var<'t>]) -> Var<'t> {
        assert_eq!(a.len(), b.len(), "dot length mismatch");
        assert!(!a.is_empty(), "dot of empty sequences");
        let value = a.iter().zip(b).map(|(x, y)| x.value * y.value).sum();
        let mut t = self.inner.borrow_mut();
        let idx = t.nodes.len() as u32;
        let dep_start = t.deps.len() as u32;
        // Partials: d/da_i = b_i first, then d/db_i = a_i.
        t.deps.extend(a.iter().zip(b).map(|(x, y)| (x.idx, y.value)));
        t.deps.extend(a.iter().zip(b).map(|(x, y)| (y.idx, x.value)));
        t.nodes.push(Node {
            value,
            kind: OpKind::Dot,
            dep_start,
            dep_len: 2 * a.len() as u32,
        });
        drop(t);
        self.var(value, idx)
    }

    /// Dot product of tape values with fixed weights.
    pub fn dot_const<'t>(&'t self, xs: &[Var<'t>], w: &[f64]) -> Var<'t> {
        assert_eq!(xs.len(), w.len(), "dot_const length mismatch");
        assert!(!xs.is_empty(), "dot_const of empty sequences");
        let value = xs.iter().zip(w).map(|(x, c)| x.value * c).sum();
        let mut t = self.inner.borrow_mut();
        let idx = t.nodes.len() as u32;
        let dep_start = t.deps.len() as u32;
        t.deps.extend(xs.iter().zip(w).map(|(x, c)| (x.idx, *c)));
        t.nodes.push(Node {
            value,
            kind: OpKind::DotConst,
            dep_start,
            dep_len: xs.len() as u32,
        });
        drop(t);
        self.var(value, idx)
    }

    /// Picks `a` when `mask` holds, else `b`. The mask is a constant of the
    /// recording, so the node is the identity of the chosen operand.
    pub fn select<'t>(&'t self, mask: bool, a: Var<'t>, b: Var<'t>) -> Var<'t> {
        let chosen = if mask { a } else { b };
        self.unary(OpKind::Select, chosen, chosen.value, 1.0)
    }

    /// One reverse sweep from `output`, filling `grad` (length = input count)
    /// with d output / d input_i. The tape itself is left untouched and can
    /// be replayed afterwards.
    pub fn gradient_into(&self, output: Var<'_>, grad: &mut [f64]) -> Result<(), GradError> {
        if !std::ptr::eq(output.tape, self) {
            return Err(GradError::ForeignVariable);
        }
        let mut t = self.inner.borrow_mut();
        if let Some(f) = t.fault {
            return Err(GradError::Domain(f));
        }
        let out_idx = output.idx as usize;
        if out_idx >= t.nodes.len() {
            return Err(GradError::ForeignVariable);
        }
        let out_value = t.nodes[out_idx].value;
        if !out_value.is_finite() {
            return Err(GradError::NonFinite(out_value));
        }
        if grad.len() != t.input_nodes.len() {
            return Err(GradError::InputLen {
                expected: t.input_nodes.len(),
                got: grad.len(),
            });
        }
        let t = &mut *t;
        t.adjoint.clear();
        t.adjoint.resize(out_idx + 1, 0.0);
        t.adjoint[out_idx] = 1.0;
        for i in (0..=out_idx).rev() {
            let a = t.adjoint[i];
            if a == 0.0 {
                continue;
            }
            let node = t.nodes[i];
            let start = node.dep_start as usize;
            for &(dep, partial) in &t.deps[start..start + node.dep_len as usize] {
                t.adjoint[dep as usize] += a * partial;
            }
        }
        for (g, &node_idx) in grad.iter_mut().zip(&t.input_nodes) {
            *g = if (node_idx as usize) <= out_idx {
                t.adjoint[node_idx as usize]
            } else {
                0.0
            };
        }
        Ok(())
    }

    /// Convenience wrapper returning a freshly allocated gradient vector.
    pub fn gradient(&self, output: Var<'_>) -> Result<Vec<f64>, GradError> {
        let mut grad = vec![0.0; self.input_count()];
        self.gradient_into(output, &mut grad)?;
        Ok(grad)
    }

    /// Re-executes the recorded computation with new input values, without
    /// growing the tape, and returns the refreshed value of `output`. Node
    /// values and local partials are updated in place, so a gradient sweep
    /// after a replay is also valid.
    pub fn replay(&self, output: Var<'_>, inputs: &[f64]) -> Result<f64, GradError> {
        if !std::ptr::eq(output.tape, self) {
            return Err(GradError::ForeignVariable);
        }
        let mut t = self.inner.borrow_mut();
        if inputs.len() != t.input_nodes.len() {
            return Err(GradError::InputLen {
                expected: t.input_nodes.len(),
                got: inputs.len(),
            });
        }
        t.fault = None;
        let t = &mut *t;
        let mut next_input = 0usize;
        let mut fault: Option<DomainFault> = None;
        let note = |kind: &'static str, value: f64, fault: &mut Option<DomainFault>| {
            if fault.is_none() {
                *fault = Some(DomainFault { kind, value });
            }
        };
        for i in 0..t.nodes.len() {
            let node = t.nodes[i];
            let start = node.dep_start as usize;
            let len = node.dep_len as usize;
            // Fetch up to two operand values without borrowing deps mutably.
            let dep_idx = |k: usize| t.deps[start + k].0 as usize;
            let value = match node.kind {
                OpKind::Input => {
                    let v = inputs[next_input];
                    next_input += 1;
                    v
                }
                OpKind::Const => node.value,
                OpKind::Add => t.nodes[dep_idx(0)].value + t.nodes[dep_idx(1)].value,
                OpKind::Sub => t.nodes[dep_idx(0)].value - t.nodes[dep_idx(1)].value,
                OpKind::Mul => {
                    let (a, b) = (t.nodes[dep_idx(0)].value, t.nodes[dep_idx(1)].value);
                    t.deps[start].1 = b;
                    t.deps[start + 1].1 = a;
                    a * b
                }
                OpKind::Div => {
                    let (a, b) = (t.nodes[dep_idx(0)].value, t.nodes[dep_idx(1)].value);
                    if b == 0.0 {
                        note("div", b, &mut fault);
                    }
                    t.deps[start].1 = 1.0 / b;
                    t.deps[start + 1].1 = -a / (b * b);
                    a / b
                }
                OpKind::Neg => -t.nodes[dep_idx(0)].value,
                OpKind::Exp => {
                    let v = t.nodes[dep_idx(0)].value.exp();
                    t.deps[start].1 = v;
                    v
                }
                OpKind::Ln => {
                    let x = t.nodes[dep_idx(0)].value;
                    if x <= 0.0 {
                        note("ln", x, &mut fault);
                    }
                    t.deps[start].1 = 1.0 / x;
                    x.ln()
                }
                OpKind::Log1p => {
                    let x = t.nodes[dep_idx(0)].value;
                    if x <= -1.0 {
                        note("log1p", x, &mut fault);
                    }
                    t.deps[start].1 = 1.0 / (1.0 + x);
                    x.ln_1p()
                }
                OpKind::Lgamma => {
                    let x = t.nodes[dep_idx(0)].value;
                    if x <= 0.0 {
                        note("lgamma", x, &mut fault);
                    }
                    t.deps[start].1 = digamma(x);
                    lgamma(x)
                }
                OpKind::Square => {
                    let x = t.nodes[dep_idx(0)].value;
                    t.deps[start].1 = 2.0 * x;
                    x * x
                }
                OpKind::Sqrt => {
                    let x = t.nodes[dep_idx(0)].value;
                    if x < 0.0 {
                        note("sqrt", x, &mut fault);
                    }
                    let v = x.sqrt();
                    t.deps[start].1 = 0.5 / v;
                    v
                }
                OpKind::PowConst(c) => {
                    let x = t.nodes[dep_idx(0)].value;
                    let v = x.powf(c);
                    t.deps[start].1 = c * x.powf(c - 1.0);
                    if !v.is_finite() && x.is_finite() {
                        note("pow_const", x, &mut fault);
                    }
                    v
                }
                OpKind::AddConst(c) => t.nodes[dep_idx(0)].value + c,
                OpKind::MulConst(c) => t.nodes[dep_idx(0)].value * c,
                OpKind::Sum => {
                    let mut acc = 0.0;
                    for k in 0..len {
                        acc += t.nodes[t.deps[start + k].0 as usize].value;
                    }
                    acc
                }
                OpKind::Dot => {
                    let half = len / 2;
                    let mut acc = 0.0;
                    for k in 0..half {
                        let a = t.nodes[t.deps[start + k].0 as usize].value;
                        let b = t.nodes[t.deps[start + half + k].0 as usize].value;
                        acc += a * b;
                        t.deps[start + k].1 = b;
                        t.deps[start + half + k].1 = a;
                    }
                    acc
                }
                OpKind::DotConst => {
                    let mut acc = 0.0;
                    for k in 0..len {
                        let (dep, w) = t.deps[start + k];
                        acc += t.nodes[dep as usize].value * w;
                    }
                    acc
                }
                OpKind::Select => t.nodes[dep_idx(0)].value,
            };
            t.nodes[i].value = value;
        }
        t.fault = fault;
        if let Some(f) = fault {
            return Err(GradError::Domain(f));
        }
        Ok(t.nodes[output.idx as usize].value)
    }

    /// Current value of a node (refreshed by `replay`).
    pub fn value_of(&self, v: Var<'_>) -> f64 {
        self.inner.borrow().nodes[v.idx as usize].value
    }
}

impl<'t> Var<'t> {
    /// Forward value at record time.
    pub fn value(self) -> f64 {
        self.value
    }

    pub fn exp(self) -> Var<'t> {
        let v = self.value.exp();
        self.tape.unary(OpKind::Exp, self, v, v)
    }

    pub fn ln(self) -> Var<'t> {
        if self.value <= 0.0 {
            self.tape.note_fault("ln", self.value);
        }
        self.tape
            .unary(OpKind::Ln, self, self.value.ln(), 1.0 / self.value)
    }

    pub fn log1p(self) -> Var<'t> {
        if self.value <= -1.0 {
            self.tape.note_fault("log1p", self.value);
        }
        self.tape
            .unary(OpKind::Log1p, self, self.value.ln_1p(), 1.0 / (1.0 + self.value))
    }

    pub fn lgamma(self) -> Var<'t> {
        if self.value <= 0.0 {
            self.tape.note_fault("lgamma", self.value);
        }
        self.tape
            .unary(OpKind::Lgamma, self, lgamma(self.value), digamma(self.value))
    }

    pub fn square(self) -> Var<'t> {
        self.tape
            .unary(OpKind::Square, self, self.value * self.value, 2.0 * self.value)
    }

    pub fn sqrt(self) -> Var<'t> {
        if self.value < 0.0 {
            self.tape.note_fault("sqrt", self.value);
        }
        let v = self.value.sqrt();
        self.tape.unary(OpKind::Sqrt, self, v, 0.5 / v)
    }

    /// x^c for constant c.
    pub fn powc(self, c: f64) -> Var<'t> {
        let v = self.value.powf(c);
        if !v.is_finite() && self.value.is_finite() {
            self.tape.note_fault("pow_const", self.value);
        }
        self.tape
            .unary(OpKind::PowConst(c), self, v, c * self.value.powf(c - 1.0))
    }

    pub fn add_c(self, c: f64) -> Var<'t> {
        self.tape.unary(OpKind::AddConst(c), self, self.value + c, 1.0)
    }

    pub fn mul_c(self, c: f64) -> Var<'t> {
        self.tape.unary(OpKind::MulConst(c), self, self.value * c, c)
    }

    pub fn recip(self) -> Var<'t> {
        self.powc(-1.0)
    }
}

impl<'t> Add for Var<'t> {
    type Output = Var<'t>;
    fn add(self, rhs: Var<'t>) -> Var<'t> {
        let v = self.value + rhs.value;
        let idx = self
            .tape
            .push_node(v, OpKind::Add, &[(self.idx, 1.0), (rhs.idx, 1.0)]);
        self.tape.var(v, idx)
    }
}

impl<'t> Sub for Var<'t> {
    type Output = Var<'t>;
    fn sub(self, rhs: Var<'t>) -> Var<'t> {
        let v = self.value - rhs.value;
        let idx = self
            .tape
            .push_node(v, OpKind::Sub, &[(self.idx, 1.0), (rhs.idx, -1.0)]);
        self.tape.var(v, idx)
    }
}

impl<'t> Mul for Var<'t> {
    type Output = Var<'t>;
    fn mul(self, rhs: Var<'t>) -> Var<'t> {
        let v = self.value * rhs.value;
        let idx = self
            .tape
            .push_node(v, OpKind::Mul, &[(self.idx, rhs.value), (rhs.idx, self.value)]);
        self.tape.var(v, idx)
    }
}

impl<'t> Div for Var<'t> {
    type Output = Var<'t>;
    fn div(self, rhs: Var<'t>) -> Var<'t> {
        if rhs.value == 0.0 {
            self.tape.note_fault("div", rhs.value);
        }
        let v = self.value / rhs.value;
        let idx = self.tape.push_node(
            v,
            OpKind::Div,
            &[
                (self.idx, 1.0 / rhs.value),
                (rhs.idx, -self.value / (rhs.value * rhs.value)),
            ],
        );
        self.tape.var(v, idx)
    }
}

impl<'t> Neg for Var<'t> {
    type Output = Var<'t>;
    fn neg(self) -> Var<'t> {
        self.tape.unary(OpKind::Neg, self, -self.value, -1.0)
    }
}

/// Scalar abstraction letting the forward model run either on plain floats
/// or on tape variables.
pub trait Real:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Current numeric value.
    fn val(self) -> f64;
    /// A constant in the same evaluation context as `self`.
    fn lit(self, c: f64) -> Self;
    fn exp(self) -> Self;
    fn ln(self) -> Self;
    fn log1p(self) -> Self;
    fn lgamma(self) -> Self;
    fn sqrt(self) -> Self;
    fn square(self) -> Self;
    fn powc(self, c: f64) -> Self;
    fn add_c(self, c: f64) -> Self;
    fn mul_c(self, c: f64) -> Self;
    /// Sum of a non-empty sequence.
    fn sum(xs: &[Self]) -> Self;
    /// Dot product of two non-empty, equal-length sequences.
    fn dot(a: &[Self], b: &[Self]) -> Self;
    /// Dot product against fixed weights.
    fn dot_const(xs: &[Self], w: &[f64]) -> Self;
    /// Branch on a mask that is constant within one evaluation.
    fn select(mask: bool, a: Self, b: Self) -> Self;
}

impl Real for f64 {
    fn val(self) -> f64 {
        self
    }
    fn lit(self, c: f64) -> Self {
        c
    }
    fn exp(self) -> Self {
        f64::exp(self)
    }
    fn ln(self) -> Self {
        f64::ln(self)
    }
    fn log1p(self) -> Self {
        f64::ln_1p(self)
    }
    fn lgamma(self) -> Self {
        lgamma(self)
    }
    fn sqrt(self) -> Self {
        f64::sqrt(self)
    }
    fn square(self) -> Self {
        self * self
    }
    fn powc(self, c: f64) -> Self {
        self.powf(c)
    }
    fn add_c(self, c: f64) -> Self {
        self + c
    }
    fn mul_c(self, c: f64) -> Self {
        self * c
    }
    fn sum(xs: &[Self]) -> Self {
        xs.iter().sum()
    }
    fn dot(a: &[Self], b: &[Self]) -> Self {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }
    fn dot_const(xs: &[Self], w: &[f64]) -> Self {
        xs.iter().zip(w).map(|(x, c)| x * c).sum()
    }
    fn select(mask: bool, a: Self, b: Self) -> Self {
        if mask {
            a
        } else {
            b
        }
    }
}

impl<'t> Real for Var<'t> {
    fn val(self) -> f64 {
        self.value
    }
    fn lit(self, c: f64) -> Self {
        self.tape.constant(c)
    }
    fn exp(self) -> Self {
        Var::exp(self)
    }
    fn ln(self) -> Self {
        Var::ln(self)
    }
    fn log1p(self) -> Self {
        Var::log1p(self)
    }
    fn lgamma(self) -> Self {
        Var::lgamma(self)
    }
    fn sqrt(self) -> Self {
        Var::sqrt(self)
    }
    fn square(self) -> Self {
        Var::square(self)
    }
    fn powc(self, c: f64) -> Self {
        Var::powc(self, c)
    }
    fn add_c(self, c: f64) -> Self {
        Var::add_c(self, c)
    }
    fn mul_c(self, c: f64) -> Self {
        Var::mul_c(self, c)
    }
    fn sum(xs: &[Self]) -> Self {
        xs[0].tape.sum(xs)
    }
    fn dot(a: &[Self], b: &[Self]) -> Self {
        a[0].tape.dot(a, b)
    }
    fn dot_const(xs: &[Self], w: &[f64]) -> Self {
        xs[0].tape.dot_const(xs, w)
    }
    fn select(mask: bool, a: Self, b: Self) -> Self {
        a.tape.select(mask, a, b)
    }
}
