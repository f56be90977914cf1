//! Follows a random q-P_(2,2) state for a few steps, checking each step
//! against the tau1 mutation word.
//!
//! Run with `cargo run --example tau1_orbit`.

use qpvi::painleve::{painleve_sampler, qp_step, state_of_point, tau1_by_word};

fn main() -> qpvi::Result<()> {
    let n = 1;
    let mut st = state_of_point(n, &painleve_sampler(n)(0)?)?;
    println!("q = {}", st.q);
    for step in 0..4 {
        let f = st.f.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ");
        println!("step {step}: t = {}, f = [{f}]", st.t);
        let next = qp_step(&st)?;
        let by_word = tau1_by_word(&st)?;
        assert_eq!((&by_word.f, &by_word.g), (&next.f, &next.g), "tau1 word and qp_step disagree");
        st = next;
    }
    Ok(())
}
