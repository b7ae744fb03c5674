// Explicit covers of H(n) and F(n, m), checked as maximal stem extensions.

use superlie::extensions::is_maximal_stem;
use superlie::families::{cover_filiform, cover_heisenberg_odd};

pub fn run() -> superlie::Result<()> {
    let mut covers = Vec::new();
    for n in 1..=3 {
        covers.push((format!("H({n})"), cover_heisenberg_odd(n)?));
    }
    for (n, m) in [(3, 0), (2, 1), (2, 2), (1, 3), (3, 3)] {
        covers.push((format!("F({n},{m})"), cover_filiform(n, m)?));
    }
    for (label, e) in covers {
        println!(
            "{label:<8} cover {:>8} kernel {:>7} extension {} stem {} maximal {} iso {}",
            e.total.sdim().to_string(),
            e.kernel.sdim().to_string(),
            e.verify().is_ok(),
            e.is_stem(),
            is_maximal_stem(&e)?,
            e.canonical_iso()?.verify_iso()
        );
    }
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
