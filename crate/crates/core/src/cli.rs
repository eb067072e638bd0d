//! Command-line pipeline.

pub fn run() -> i32 {
    0
}
