// Turn a central extension into a stem extension by quotienting out a stem
// denominator.

use std::sync::Arc;

use superlie::cohomology::{Cochain2, CochainSpace};
use superlie::extensions::{is_stem_denominator, stem_denominator, stem_deformation, ExtensionSpec};
use superlie::families::{abelian, heisenberg_odd};
use superlie::Parity;

pub fn run() -> superlie::Result<()> {
    // central extension of H(1) by all of its 2-cocycles, plus a trivial summand
    let h = Arc::new(heisenberg_odd(1)?);
    let z = CochainSpace::new(&h).cocycles();
    let cocycles: Vec<Cochain2> = Parity::BOTH
        .iter()
        .flat_map(|&p| {
            z.echelon(p).rows().iter().map(move |v| Cochain2 {
                parity: p,
                coefficients: v.clone(),
            })
        })
        .collect();
    let central = ExtensionSpec::central(h.clone(), &cocycles)?;
    println!(
        "central extension: total {} kernel {} stem {}",
        central.total.sdim(),
        central.kernel.sdim(),
        central.is_stem()
    );
    let x = stem_denominator(&central, None)?;
    println!("stem denominator {} valid {}", x.sdim(), is_stem_denominator(&central, &x)?);
    let d = stem_deformation(&central, &x)?;
    println!("deformation: total {} kernel {} stem {}", d.total.sdim(), d.kernel.sdim(), d.is_stem());

    let trivial = ExtensionSpec::trivial(&abelian(1, 1), h)?;
    let x = stem_denominator(&trivial, None)?;
    let d = stem_deformation(&trivial, &x)?;
    println!("trivial extension deforms to kernel {}", d.kernel.sdim());
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
