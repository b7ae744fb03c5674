// Compares the multiplier from graded cohomology with the Hopf-type
// formula over a truncated free presentation, for both denominators.

use std::sync::Arc;
use std::time::Instant;

use superlie::cohomology::multiplier_sdim;
use superlie::families::FamilyId;
use superlie::freepres::{default_class_bound, default_generators, presentation, Denominator};

pub fn run() -> superlie::Result<()> {
    let mut ids = Vec::new();
    for n in 1..=3 {
        ids.push(FamilyId::HeisenbergOdd { n });
    }
    for p in 0..=3 {
        for q in 0..=3 - p {
            if p + q >= 1 {
                ids.push(FamilyId::HeisenbergEven { p, q });
            }
        }
    }
    for n in 1..=3 {
        for m in 0..=3 {
            let id = FamilyId::ModelFiliform { n, m };
            if id.is_model() {
                ids.push(id);
            }
        }
    }
    for s in 0..=3 {
        for t in 0..=3 {
            if s + t >= 1 {
                ids.push(FamilyId::Abelian { s, t });
            }
        }
    }
    println!("{:<24} {:>6} {:>8} {:>8} {:>8} {:>8} {:>6}", "algebra", "c", "h2", "rf", "rr@c", "rr@c+1", "ms");
    for id in ids {
        let start = Instant::now();
        let alg = Arc::new(id.build()?);
        let h2 = multiplier_sdim(&alg)?;
        let c = default_class_bound(&alg)?;
        let gens = default_generators(&alg);
        let at_c = presentation(alg.clone(), &gens, c)?;
        let at_next = presentation(alg.clone(), &gens, c + 1)?;
        let rf = at_c.hopf_sdim(Denominator::RF);
        let rf_next = at_next.hopf_sdim(Denominator::RF);
        let stable = if rf == rf_next { "" } else { "  unstable" };
        let rr = at_c.hopf_sdim(Denominator::RR);
        let rr_next = at_next.hopf_sdim(Denominator::RR);
        println!(
            "{:<24} {:>6} {:>8} {:>8} {:>8} {:>8} {:>6}{stable}",
            id.to_string(),
            c,
            h2.to_string(),
            rf.to_string(),
            rr.to_string(),
            rr_next.to_string(),
            start.elapsed().as_millis()
        );
    }
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
