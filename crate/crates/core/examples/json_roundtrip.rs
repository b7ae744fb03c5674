// Save family members and covers as JSON and load them back.

use superlie::families::FamilyId;
use superlie::io::{load_algebra, load_extension, save_algebra, save_extension};

pub fn run() -> superlie::Result<()> {
    let ids = [
        FamilyId::HeisenbergEven { p: 1, q: 1 },
        FamilyId::HeisenbergOdd { n: 2 },
        FamilyId::ModelFiliform { n: 2, m: 2 },
    ];
    for id in ids {
        let text = save_algebra(&id.build()?);
        let (alg, canonical) = load_algebra(&text)?;
        let same = save_algebra(&alg) == text;
        let ext = save_extension(&id.cover()?);
        let (_, ext_canonical) = load_extension(&ext)?;
        println!(
            "{id:<22} algebra {} bytes canonical {canonical} identical {same}; cover {} bytes canonical {ext_canonical}",
            text.len(),
            ext.len()
        );
    }
    let h = FamilyId::HeisenbergOdd { n: 1 }.build()?;
    print!("{}", save_algebra(&h));
    Ok(())
}

fn main() -> superlie::Result<()> {
    run()
}
