// Build a small superalgebra by hand, check the axioms and print its
// invariants and multiplier.

use superlie::cohomology::{kernel_bound, multiplier_sdim};
use superlie::AlgebraBuilder;
use superlie::Field;

pub fn run() -> superlie::Result<()> {
    // u even; z, w odd; [u, w] = z
    let mut b = AlgebraBuilder::new(Field::Rational);
    let u = b.even("u");
    let z = b.odd("z");
    let w = b.odd("w");
    b.bracket_ints(u, w, &[(z, 1)]);
    let alg = b.build()?;

    println!("axioms: {}", alg.validate().to_string().trim_end());
    println!("sdim: {}", alg.sdim());
    println!("center: {}", alg.center().sdim());
    println!("derived: {}", alg.derived().sdim());
    println!("class: {:?}", alg.nilpotency_class());
    let m = multiplier_sdim(&alg)?;
    let bound = kernel_bound(alg.sdim() - alg.derived().sdim());
    println!("multiplier: {m} (bound from the abelianization: {bound})");
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
