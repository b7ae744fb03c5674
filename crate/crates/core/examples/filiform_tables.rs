// Multipliers of the model filiform superalgebras F(n, m), with both the
// four-case reference table and the closed form that matches computation.

use superlie::cohomology::multiplier_sdim;
use superlie::families::{model_filiform_multiplier, multiplier_formula, FamilyId};

pub fn run() -> superlie::Result<()> {
    println!("{:<10} {:>9} {:>9} {:>9}", "(n,m)", "computed", "reference", "derived");
    for n in 1..=4 {
        for m in 0..=4 {
            let id = FamilyId::ModelFiliform { n, m };
            if !id.is_model() {
                continue;
            }
            let computed = multiplier_sdim(&id.build()?)?;
            let reference = multiplier_formula(id)?;
            let derived = model_filiform_multiplier(n, m)?;
            let flag = if computed == reference { "" } else { "  differs from reference" };
            println!(
                "{:<10} {:>9} {:>9} {:>9}{flag}",
                format!("({n},{m})"),
                computed.to_string(),
                reference.to_string(),
                derived.to_string()
            );
        }
    }
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
