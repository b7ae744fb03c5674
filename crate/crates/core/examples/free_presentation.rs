// Free nilpotent superalgebras, a free presentation of H(1), and the cover
// rebuilt from F / [R, F].

use std::sync::Arc;

use superlie::extensions::is_maximal_stem;
use superlie::families::heisenberg_odd;
use superlie::freepres::{cover_from_free, free_nilpotent, presentation, Denominator};
use superlie::Parity;

pub fn run() -> superlie::Result<()> {
    let f = free_nilpotent(&[Parity::Even, Parity::Odd], 4)?;
    let by_degree: Vec<String> = (1..=4).map(|k| f.degree_sdim(k).to_string()).collect();
    println!("free on (even, odd), class 4: {} by degree {}", f.sdim(), by_degree.join(" "));

    let h = Arc::new(heisenberg_odd(1)?);
    let p = presentation(h.clone(), &[h.unit(0), h.unit(2)], 3)?;
    println!(
        "H(1): F {} R {} R∩[F,F] {} [R,F] {} multiplier {}",
        p.free.sdim(),
        p.kernel.sdim(),
        p.relations_in_derived().sdim(),
        p.commutator_rf().sdim(),
        p.hopf_sdim(Denominator::RF)
    );
    let cover = cover_from_free(h, Some(3))?;
    println!(
        "cover from F/[R,F]: {} kernel {} maximal {}",
        cover.total.sdim(),
        cover.kernel.sdim(),
        is_maximal_stem(&cover)?
    );
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
