//! Exact symbolic kernel for the two-parameter quantum group `U_{r,s}(F_4)`
//! and its restricted quotient `u_{r,s}(F_4)`.

pub mod coeff;
pub mod fullu;
pub mod hopf;
pub mod linalg;
pub mod lincomb;
pub mod pbwplus;
pub mod rootdata;
pub mod verify;

/// Runs `f` on a thread with a large stack; straightening recursion is deep.
pub fn run_with_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(1 << 30)
            .spawn_scoped(s, f)
            .expect("spawn worker thread")
            .join()
            .expect("worker thread panicked")
    })
}
