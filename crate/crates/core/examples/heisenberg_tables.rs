// Multipliers of the Heisenberg superalgebras against their closed forms.

use superlie::cohomology::multiplier_sdim;
use superlie::families::{multiplier_formula, FamilyId};

pub fn run() -> superlie::Result<()> {
    println!("odd center");
    for n in 1..=4 {
        let id = FamilyId::HeisenbergOdd { n };
        let m = multiplier_sdim(&id.build()?)?;
        println!("  {id:<22} {m:>9} formula {}", multiplier_formula(id)?);
    }
    println!("even center");
    for total in 1..=3 {
        for p in 0..=total {
            let id = FamilyId::HeisenbergEven { p, q: total - p };
            let m = multiplier_sdim(&id.build()?)?;
            println!("  {id:<22} {m:>9} formula {}", multiplier_formula(id)?);
        }
    }
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
