//! Heisenberg and model filiform superalgebras, their covers, and closed-form
//! multiplier superdimensions.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraBuilder, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::extensions::ExtensionSpec;
use crate::freepres::cover_from_free;
use crate::hom::HomSpec;
use crate::linalg::SparseVec;
use crate::scalar::Field;
use crate::superdim::SuperDim;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    HeisenbergEven { p: usize, q: usize },
    HeisenbergOdd { n: usize },
    ModelFiliform { n: usize, m: usize },
    Abelian { s: usize, t: usize },
}

impl FamilyId {
    /// CLI name of the family kind.
    pub fn kind(&self) -> &'static str {
        match self {
            FamilyId::HeisenbergEven { .. } => "heisenberg-even",
            FamilyId::HeisenbergOdd { .. } => "heisenberg-odd",
            FamilyId::ModelFiliform { .. } => "model-filiform",
            FamilyId::Abelian { .. } => "abelian",
        }
    }

    /// Parameters as `a,b` or `a`.
    pub fn parameters(&self) -> String {
        match *self {
            FamilyId::HeisenbergEven { p, q } => format!("{p},{q}"),
            FamilyId::HeisenbergOdd { n } => format!("{n}"),
            FamilyId::ModelFiliform { n, m } => format!("{n},{m}"),
            FamilyId::Abelian { s, t } => format!("{s},{t}"),
        }
    }

    /// Checks the constraints for building the algebra.
    pub fn check(&self) -> Result<()> {
        match *self {
            FamilyId::HeisenbergEven { p, q } if p + q == 0 => {
                Err(Error::InvalidParameters("heisenberg-even needs p + q >= 1".into()))
            }
            FamilyId::HeisenbergOdd { n: 0 } => {
                Err(Error::InvalidParameters("heisenberg-odd needs n >= 1".into()))
            }
            FamilyId::ModelFiliform { n: 0, .. } => {
                Err(Error::InvalidParameters("model-filiform needs n >= 1".into()))
            }
            _ => Ok(()),
        }
    }

    /// Whether the instance carries the model filiform label, i.e. is not
    /// one of the abelian cases `(1,0)`, `(1,1)`.
    pub fn is_model(&self) -> bool {
        match *self {
            FamilyId::ModelFiliform { n, m } => n >= 1 && !(n == 1 && m <= 1),
            _ => self.check().is_ok(),
        }
    }

    pub fn build(&self) -> Result<LieSuperalgebra> {
        match *self {
            FamilyId::HeisenbergEven { p, q } => heisenberg_even(p, q),
            FamilyId::HeisenbergOdd { n } => heisenberg_odd(n),
            FamilyId::ModelFiliform { n, m } => model_filiform(n, m),
            FamilyId::Abelian { s, t } => Ok(abelian(s, t)),
        }
    }

    /// Maximal stem extension: the explicit tables where they exist,
    /// otherwise the cover obtained from a free presentation.
    pub fn cover(&self) -> Result<ExtensionSpec> {
        match *self {
            FamilyId::HeisenbergOdd { n } => cover_heisenberg_odd(n),
            FamilyId::ModelFiliform { n, m } => cover_filiform(n, m),
            FamilyId::HeisenbergEven { .. } | FamilyId::Abelian { .. } => {
                cover_from_free(Arc::new(self.build()?), None)
            }
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&format!("{}({})", self.kind(), self.parameters()))
    }
}

fn builder() -> AlgebraBuilder {
    AlgebraBuilder::new(Field::Rational)
}

/// `H(p, q)`: basis `u_1..u_p, v_1..v_p, z | w_1..w_q` with
/// `[u_i, v_i] = z` and `[w_k, w_k] = z`.
pub fn heisenberg_even(p: usize, q: usize) -> Result<LieSuperalgebra> {
    FamilyId::HeisenbergEven { p, q }.check()?;
    let mut b = builder();
    let u: Vec<usize> = (1..=p).map(|i| b.even(format!("u{i}"))).collect();
    let v: Vec<usize> = (1..=p).map(|i| b.even(format!("v{i}"))).collect();
    let z = b.even("z");
    let w: Vec<usize> = (1..=q).map(|k| b.odd(format!("w{k}"))).collect();
    for i in 0..p {
        b.bracket_ints(u[i], v[i], &[(z, 1)]);
    }
    for &wk in &w {
        b.bracket_ints(wk, wk, &[(z, 1)]);
    }
    b.build()
}

/// `H(n)`: basis `u_1..u_n | z, w_1..w_n` with `[u_i, w_i] = z`.
pub fn heisenberg_odd(n: usize) -> Result<LieSuperalgebra> {
    FamilyId::HeisenbergOdd { n }.check()?;
    let mut b = builder();
    let u: Vec<usize> = (1..=n).map(|i| b.even(format!("u{i}"))).collect();
    let z = b.odd("z");
    let w: Vec<usize> = (1..=n).map(|i| b.odd(format!("w{i}"))).collect();
    for i in 0..n {
        b.bracket_ints(u[i], w[i], &[(z, 1)]);
    }
    b.build()
}

/// `F(n, m)`: basis `x_0..x_n | y_1..y_m` with `[x_0, x_i] = x_{i+1}` and
/// `[x_0, y_j] = y_{j+1}`.
pub fn model_filiform(n: usize, m: usize) -> Result<LieSuperalgebra> {
    FamilyId::ModelFiliform { n, m }.check()?;
    let mut b = builder();
    let x: Vec<usize> = (0..=n).map(|i| b.even(format!("x{i}"))).collect();
    let y: Vec<usize> = (1..=m).map(|j| b.odd(format!("y{j}"))).collect();
    for i in 1..n {
        b.bracket_ints(x[0], x[i], &[(x[i + 1], 1)]);
    }
    for j in 1..m {
        b.bracket_ints(x[0], y[j - 1], &[(y[j], 1)]);
    }
    b.build()
}

/// Abelian superalgebra of superdimension `(s | t)`.
pub fn abelian(s: usize, t: usize) -> LieSuperalgebra {
    let mut b = builder();
    for i in 1..=s {
        b.even(format!("e{i}"));
    }
    for j in 1..=t {
        b.odd(format!("f{j}"));
    }
    b.build().expect("abelian algebra is always valid")
}

/// Extension whose projection sends the first `base.dim()` basis vectors of
/// `total` to the base basis and everything after them to zero.
fn hat_extension(total: LieSuperalgebra, base: LieSuperalgebra) -> Result<ExtensionSpec> {
    let total = Arc::new(total);
    let base = Arc::new(base);
    let d = base.dim();
    let images = (0..total.dim())
        .map(|i| if i < d { base.unit(i) } else { SparseVec::zero() })
        .collect();
    let projection = HomSpec::new(total.clone(), base.clone(), images)?;
    let kernel = total.span_of_basis(&(d..total.dim()).collect::<Vec<_>>());
    Ok(ExtensionSpec::new(total, kernel, base, projection))
}

/// Maximal stem extension of `H(n)`.
///
/// The generators `a_i | c, b_i` come first in the order of the base basis
/// `u_i | z, w_i`, followed by the multiplier part.
#[allow(clippy::needless_range_loop)]
pub fn cover_heisenberg_odd(n: usize) -> Result<ExtensionSpec> {
    let base = heisenberg_odd(n)?;
    let mut b = builder();
    let a: Vec<usize> = (1..=n).map(|i| b.even(format!("a{i}"))).collect();
    let c = b.odd("c");
    let bs: Vec<usize> = (1..=n).map(|i| b.odd(format!("b{i}"))).collect();
    if n == 1 {
        let w = b.even("w");
        let m = b.odd("m");
        b.bracket_ints(a[0], bs[0], &[(c, 1)]);
        b.bracket_ints(a[0], c, &[(m, 1)]);
        b.bracket_ints(bs[0], bs[0], &[(w, 1)]);
        return hat_extension(b.build()?, base);
    }
    let mut y = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            y[i][j] = b.even(format!("y{}_{}", i + 1, j + 1));
        }
    }
    // [b_i, b_i] is not forced to vanish, so the diagonal is kept.
    let mut w = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in i..n {
            w[i][j] = b.even(format!("w{}_{}", i + 1, j + 1));
        }
    }
    let yd: Vec<usize> = (1..n).map(|i| b.odd(format!("y{}", i + 1))).collect();
    let mut z = vec![vec![usize::MAX; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                z[i][j] = b.odd(format!("z{}_{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            b.bracket_ints(a[i], a[j], &[(y[i][j], 1)]);
        }
        for j in 0..n {
            if i == j {
                let mut v = vec![(c, 1)];
                if i > 0 {
                    v.push((yd[i - 1], 1));
                }
                b.bracket_ints(a[i], bs[i], &v);
            } else {
                b.bracket_ints(a[i], bs[j], &[(z[i][j], 1)]);
            }
        }
        for j in i..n {
            b.bracket_ints(bs[i], bs[j], &[(w[i][j], 1)]);
        }
    }
    hat_extension(b.build()?, base)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Maximal stem extension of the model filiform superalgebra `F(n, m)`.
///
/// Generators `a_0..a_n | b_1..b_m` lift `x_i | y_j`. The multiplier part is
/// spanned by `s = [a_0, a_n]`, `y_d` (odd `d`, `3 <= d <= n+1`), `z_d` (even
/// `d`, `2 <= d <= m+1`), `t_d` (`2 <= d <= min(n,m)+1`) and `r = [a_0, b_m]`.
#[allow(clippy::needless_range_loop)]
pub fn cover_filiform(n: usize, m: usize) -> Result<ExtensionSpec> {
    let id = FamilyId::ModelFiliform { n, m };
    id.check()?;
    if !id.is_model() {
        return Err(Error::InvalidParameters(format!(
            "model-filiform({n},{m}) is abelian, no cover is built"
        )));
    }
    let base = model_filiform(n, m)?;
    let k = n.min(m);
    let mut b = builder();
    let a: Vec<usize> = (0..=n).map(|i| b.even(format!("a{i}"))).collect();
    let bs: Vec<usize> = (0..=m)
        .map(|j| if j == 0 { usize::MAX } else { b.odd(format!("b{j}")) })
        .collect();
    let s = b.even("s");
    let mut y = vec![usize::MAX; n + 2];
    for d in (3..=n + 1).step_by(2) {
        y[d] = b.even(format!("y{d}"));
    }
    let mut z = vec![usize::MAX; m + 2];
    for d in (2..=m + 1).step_by(2) {
        z[d] = b.even(format!("z{d}"));
    }
    let mut t = vec![usize::MAX; k + 2];
    for d in 2..=k + 1 {
        t[d] = b.odd(format!("t{d}"));
    }
    let r = (m >= 1).then(|| b.odd("r"));

    for i in 1..n {
        b.bracket_ints(a[0], a[i], &[(a[i + 1], 1)]);
    }
    b.bracket_ints(a[0], a[n], &[(s, 1)]);
    for j in 1..m {
        b.bracket_ints(a[0], bs[j], &[(bs[j + 1], 1)]);
    }
    if let Some(r) = r {
        b.bracket_ints(a[0], bs[m], &[(r, 1)]);
    }
    for i in 1..=n {
        for j in i + 1..=n {
            if (i + j) % 2 == 1 && i + j <= n + 1 {
                b.bracket_ints(a[i], a[j], &[(y[i + j], sign(i - 1))]);
            }
        }
        for j in 1..=m {
            if i + j <= k + 1 {
                b.bracket_ints(a[i], bs[j], &[(t[i + j], sign(i - 1))]);
            }
        }
    }
    for i in 1..=m {
        for j in i..=m {
            if (i + j).is_multiple_of(2) && i + j <= m + 1 {
                b.bracket_ints(bs[i], bs[j], &[(z[i + j], sign(i - 1))]);
            }
        }
    }
    hat_extension(b.build()?, base)
}

/// Multiplier superdimension of `abelian(s, t)`: `Λ²` of the even part plus
/// `S²` of the odd part, and the mixed products.
pub fn abelian_multiplier(s: usize, t: usize) -> SuperDim {
    SuperDim::new(s * s.saturating_sub(1) / 2 + t * (t + 1) / 2, s * t)
}

/// Closed form for the multiplier of `F(n, m)` obtained from cohomology
/// and the free presentation:
/// `(1 + ⌊n/2⌋ + ⌊(m+1)/2⌋ | min(n,m) + 1)`, odd part `0` when `m = 0`.
pub fn model_filiform_multiplier(n: usize, m: usize) -> Result<SuperDim> {
    FamilyId::ModelFiliform { n, m }.check()?;
    let odd = if m == 0 { 0 } else { n.min(m) + 1 };
    Ok(SuperDim::new(1 + n / 2 + m.div_ceil(2), odd))
}

/// Reference closed-form multiplier superdimensions.
///
/// The model filiform branch is the four-case table `(n-1|0)`, `(n|1)`,
/// `(n-1|n+m-1)`, `(0|1)`; it disagrees with the computed multiplier except
/// at `(3,0)` and `(4,0)`.
/// See [`model_filiform_multiplier`] for the computed closed form.
pub fn multiplier_formula(f: FamilyId) -> Result<SuperDim> {
    f.check()?;
    Ok(match f {
        FamilyId::HeisenbergEven { p: 0, q: 1 } => SuperDim::ZERO,
        FamilyId::HeisenbergEven { p: 1, q: 0 } => SuperDim::new(2, 0),
        FamilyId::HeisenbergEven { p, q } => {
            SuperDim::new(2 * p * p - p + (q * q + q) / 2 - 1, 2 * p * q)
        }
        FamilyId::HeisenbergOdd { n: 1 } => SuperDim::new(1, 1),
        FamilyId::HeisenbergOdd { n } => SuperDim::new(n * n, n * n - 1),
        FamilyId::ModelFiliform { n, m } => {
            if !f.is_model() {
                return Err(Error::InvalidParameters(format!(
                    "model-filiform({n},{m}) has no reference multiplier"
                )));
            }
            match (n, m) {
                (1, _) => SuperDim::new(0, 1),
                (_, 0) => SuperDim::new(n - 1, 0),
                (_, 1) => SuperDim::new(n, 1),
                _ => SuperDim::new(n - 1, n + m - 1),
            }
        }
        FamilyId::Abelian { s, t } => abelian_multiplier(s, t),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::multiplier_sdim;
    use crate::extensions::is_maximal_stem;

    #[test]
    fn family_shapes() {
        assert_eq!(heisenberg_even(1, 0).unwrap().sdim(), SuperDim::new(3, 0));
        assert_eq!(heisenberg_even(0, 1).unwrap().sdim(), SuperDim::new(1, 1));
        assert_eq!(heisenberg_even(1, 1).unwrap().sdim(), SuperDim::new(3, 1));
        assert_eq!(heisenberg_odd(1).unwrap().sdim(), SuperDim::new(1, 2));
        assert_eq!(heisenberg_odd(2).unwrap().sdim(), SuperDim::new(2, 3));
        assert_eq!(heisenberg_odd(3).unwrap().center().sdim(), SuperDim::new(0, 1));
        assert_eq!(model_filiform(3, 0).unwrap().sdim(), SuperDim::new(4, 0));
        assert_eq!(model_filiform(2, 2).unwrap().sdim(), SuperDim::new(3, 2));
        let f12 = model_filiform(1, 2).unwrap();
        assert_eq!(f12.sdim(), SuperDim::new(2, 2));
        assert_eq!(f12.derived().sdim(), SuperDim::new(0, 1));
    }

    #[test]
    fn invalid_parameters() {
        assert!(heisenberg_even(0, 0).is_err());
        assert!(heisenberg_odd(0).is_err());
        assert!(model_filiform(0, 3).is_err());
        assert!(model_filiform(1, 0).is_ok());
        assert!(cover_filiform(1, 0).is_err());
        assert!(cover_filiform(1, 1).is_err());
        assert!(multiplier_formula(FamilyId::ModelFiliform { n: 1, m: 1 }).is_err());
    }

    #[test]
    fn heisenberg_centers_are_derived() {
        for a in [heisenberg_even(2, 1).unwrap(), heisenberg_odd(2).unwrap()] {
            assert!(a.validate().is_ok());
            assert_eq!(a.center(), a.derived());
            assert_eq!(a.center().dim(), 1);
        }
    }

    #[test]
    fn filiform_series_length() {
        let f = model_filiform(4, 2).unwrap();
        assert!(f.validate().is_ok());
        assert_eq!(f.nilpotency_class(), Some(4));
    }

    #[test]
    fn reference_formula_examples() {
        let he = multiplier_formula(FamilyId::HeisenbergEven { p: 2, q: 1 }).unwrap();
        assert_eq!(he, SuperDim::new(6, 4));
        let ho = multiplier_formula(FamilyId::HeisenbergOdd { n: 1 }).unwrap();
        assert_eq!(ho, SuperDim::new(1, 1));
        let mf = multiplier_formula(FamilyId::ModelFiliform { n: 4, m: 1 }).unwrap();
        assert_eq!(mf, SuperDim::new(4, 1));
    }

    #[test]
    fn odd_heisenberg_covers() {
        for n in 1..=3 {
            let e = cover_heisenberg_odd(n).unwrap();
            assert!(e.total.validate().is_ok(), "n={n}");
            assert!(e.verify().is_ok(), "n={n}");
            assert!(is_maximal_stem(&e).unwrap(), "n={n}");
            assert!(e.canonical_iso().unwrap().verify_iso());
        }
        assert_eq!(cover_heisenberg_odd(1).unwrap().total.sdim(), SuperDim::new(2, 3));
        assert_eq!(cover_heisenberg_odd(2).unwrap().kernel.sdim(), SuperDim::new(4, 3));
    }

    #[test]
    fn odd_heisenberg_cover_kills_a_c() {
        let e = cover_heisenberg_odd(3).unwrap();
        let c = e.total.index_of("c").unwrap();
        for i in 1..=3 {
            let a = e.total.index_of(&format!("a{i}")).unwrap();
            assert!(e.total.structure(a, c).is_zero());
        }
    }

    #[test]
    fn filiform_covers() {
        for (n, m) in [(2, 0), (3, 0), (2, 1), (2, 2), (3, 2), (1, 3), (2, 3), (1, 4)] {
            let e = cover_filiform(n, m).unwrap();
            assert!(e.total.validate().is_ok(), "({n},{m})");
            assert!(e.verify().is_ok(), "({n},{m})");
            assert!(is_maximal_stem(&e).unwrap(), "({n},{m})");
            assert_eq!(e.kernel.sdim(), model_filiform_multiplier(n, m).unwrap());
            assert!(e.total.nilpotency_class().is_some());
        }
    }

    #[test]
    fn filiform_cover_sign_relation() {
        let e = cover_filiform(3, 3).unwrap();
        let alg = &e.total;
        for i in 1..3 {
            for p in 2..=3 {
                let l = alg.bracket(&alg.unit(i), &alg.unit(4 + p - 1)).unwrap();
                let r = alg.bracket(&alg.unit(i + 1), &alg.unit(4 + p - 2)).unwrap();
                assert_eq!(l, r.neg(), "i={i} p={p}");
            }
        }
    }

    #[test]
    fn covers_without_explicit_tables() {
        let e = FamilyId::HeisenbergEven { p: 1, q: 1 }.cover().unwrap();
        assert!(is_maximal_stem(&e).unwrap());
        assert_eq!(e.kernel.sdim(), SuperDim::new(1, 2));
    }

    #[test]
    fn computed_multipliers_small() {
        assert_eq!(multiplier_sdim(&heisenberg_even(1, 1).unwrap()).unwrap(), SuperDim::new(1, 2));
        assert_eq!(multiplier_sdim(&heisenberg_odd(2).unwrap()).unwrap(), SuperDim::new(4, 3));
        assert_eq!(multiplier_sdim(&model_filiform(2, 2).unwrap()).unwrap(), SuperDim::new(3, 3));
        assert_eq!(multiplier_sdim(&abelian(2, 2)).unwrap(), abelian_multiplier(2, 2));
    }
}
