use num_complex::Complex64 as C64;
use rand::Rng;

use tritangle::states::PureState3;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// A seeded random normalized three-qubit pure state.
pub fn random_state(rng: &mut impl Rng) -> PureState3 {
    let mut amps = [c(0.0, 0.0); 8];
    for a in amps.iter_mut() {
        *a = c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    PureState3::from_unnormalized(amps).expect("nonzero with overwhelming probability").0
}

/// Runs a named check under a wall-clock budget and prints its pass line.
pub fn timed_criterion(name: &str, limit_secs: f64, body: impl FnOnce()) {
    let start = std::time::Instant::now();
    body();
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        elapsed < limit_secs,
        "{name}: runtime {elapsed:.2}s exceeded the {limit_secs}s budget"
    );
    println!("{name}: PASS ({elapsed:.2}s)");
}
