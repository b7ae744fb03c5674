//! Graded 2-cochains with trivial coefficients, cocycles, coboundaries and
//! the multiplier superdimension `sdim Z^2 - sdim B^2`.

use std::collections::HashMap;

use crate::algebra::LieSuperalgebra;
use crate::error::{Error, Result};
use crate::linalg::{Accumulator, Echelon, SparseVec};
use crate::scalar::Scalar;
use crate::subspace::{GradedSubspace, Grading};
use crate::superdim::{Parity, SuperDim};

/// Super-antisymmetric, parity-homogeneous bilinear form on an algebra,
/// stored by its values on ordered basis pairs `i <= j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain2 {
    pub parity: Parity,
    /// Coordinates in the ambient [`CochainSpace`].
    pub coefficients: SparseVec,
}

/// Coordinate space of all 2-cochains of one algebra: one coordinate per
/// pair `i <= j`, except `i == j` with `e_i` even (forced to vanish).
/// Parity-0 coordinates come first.
#[derive(Clone, Debug)]
pub struct CochainSpace<'a> {
    algebra: &'a LieSuperalgebra,
    pairs: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    grading: Grading,
}

impl<'a> CochainSpace<'a> {
    pub fn new(algebra: &'a LieSuperalgebra) -> Self {
        let d = algebra.dim();
        let mut pairs = Vec::new();
        let mut parities = Vec::new();
        for parity in Parity::BOTH {
            for i in 0..d {
                for j in i..d {
                    let pi = algebra.parity(i);
                    if pi + algebra.parity(j) != parity || (i == j && !pi.is_odd()) {
                        continue;
                    }
                    pairs.push((i, j));
                    parities.push(parity);
                }
            }
        }
        let index = pairs.iter().enumerate().map(|(c, &p)| (p, c)).collect();
        CochainSpace {
            algebra,
            pairs,
            index,
            grading: Grading::new(parities, algebra.field()),
        }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Coordinate and sign with `f(e_i, e_j) = sign * f[coordinate]`.
    pub fn coordinate(&self, i: usize, j: usize) -> Option<(usize, i64)> {
        if i <= j {
            self.index.get(&(i, j)).map(|&c| (c, 1))
        } else {
            let sign = -self.algebra.parity(i).koszul(self.algebra.parity(j));
            self.index.get(&(j, i)).map(|&c| (c, sign))
        }
    }

    pub fn basis(&self, parity: Parity) -> Vec<Cochain2> {
        let field = self.algebra.field();
        (0..self.pairs.len())
            .filter(|&c| self.grading.parity(c) == parity)
            .map(|c| Cochain2 {
                parity,
                coefficients: SparseVec::unit(c, field),
            })
            .collect()
    }

    /// Linear form `f -> f([a, b], c)` on cochain coordinates.
    fn bracket_then_pair(&self, a: usize, b: usize, c: usize, sign: i64, acc: &mut Accumulator) {
        let field = self.algebra.field();
        for (k, coeff) in self.algebra.structure(a, b).iter() {
            if let Some((col, s)) = self.coordinate(k, c) {
                acc.add_term(col, coeff * &field.from_i64(sign * s));
            }
        }
    }

    /// `(δf)(x,y,z) = (-1)^{|x||z|} f([x,y],z) + (-1)^{|x||y|} f([y,z],x)
    /// + (-1)^{|y||z|} f([z,x],y)` as a linear form in `f`.
    pub fn coboundary_equation(&self, x: usize, y: usize, z: usize) -> SparseVec {
        let a = self.algebra;
        let (px, py, pz) = (a.parity(x), a.parity(y), a.parity(z));
        let mut acc = Accumulator::default();
        self.bracket_then_pair(x, y, z, px.koszul(pz), &mut acc);
        self.bracket_then_pair(y, z, x, px.koszul(py), &mut acc);
        self.bracket_then_pair(z, x, y, py.koszul(pz), &mut acc);
        acc.finish()
    }

    fn equations(&self, parity: Parity) -> Echelon {
        let a = self.algebra;
        let d = a.dim();
        let mut sys = Echelon::new();
        // δf is graded-antisymmetric, so sorted triples suffice
        for x in 0..d {
            for y in x..d {
                for z in y..d {
                    if a.parity(x) + a.parity(y) + a.parity(z) != parity {
                        continue;
                    }
                    let row = self.coboundary_equation(x, y, z);
                    if !row.is_zero() {
                        sys.insert(&row);
                    }
                }
            }
        }
        sys
    }

    /// Cocycles of the given parity.
    pub fn cocycle_space(&self, parity: Parity) -> GradedSubspace {
        let sys = self.equations(parity);
        let mut out = GradedSubspace::zero(&self.grading);
        for v in sys.nullspace(self.pairs.len(), self.algebra.field()) {
            if self.grading.parity(v.leading().expect("nonzero").0) == parity {
                out.insert(&v).expect("rows are parity-homogeneous");
            }
        }
        out
    }

    /// Both parities; the two systems are solved concurrently.
    pub fn cocycles(&self) -> GradedSubspace {
        let (even, odd) = rayon::join(
            || self.cocycle_space(Parity::Even),
            || self.cocycle_space(Parity::Odd),
        );
        even.sum(&odd).expect("same host")
    }

    /// Cochain `(x, y) -> g([x, y])` for the coordinate functional `g = e_k^*`.
    pub fn coboundary_of_functional(&self, k: usize) -> Cochain2 {
        let a = self.algebra;
        let coeffs = SparseVec::from_pairs(self.pairs.iter().enumerate().filter_map(|(c, &(i, j))| {
            a.structure(i, j).get(k).map(|v| (c, v.clone()))
        }));
        Cochain2 {
            parity: a.parity(k),
            coefficients: coeffs,
        }
    }

    pub fn coboundary_space(&self, parity: Parity) -> GradedSubspace {
        let mut out = GradedSubspace::zero(&self.grading);
        for k in (0..self.algebra.dim()).filter(|&k| self.algebra.parity(k) == parity) {
            out.insert(&self.coboundary_of_functional(k).coefficients)
                .expect("homogeneous");
        }
        out
    }

    pub fn coboundaries(&self) -> GradedSubspace {
        self.coboundary_space(Parity::Even)
            .sum(&self.coboundary_space(Parity::Odd))
            .expect("same host")
    }

    /// `f(u, v)` for arbitrary vectors.
    pub fn evaluate(&self, f: &Cochain2, u: &SparseVec, v: &SparseVec) -> Scalar {
        let field = self.algebra.field();
        let mut total = field.zero();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                if let Some((c, s)) = self.coordinate(i, j) {
                    if let Some(x) = f.coefficients.get(c) {
                        total = &total + &(&(a * b) * &x.signed(s));
                    }
                }
            }
        }
        total
    }

    pub fn is_cocycle(&self, f: &Cochain2) -> bool {
        let d = self.algebra.dim();
        let field = self.algebra.field();
        (0..d).all(|x| {
            (x..d).all(|y| {
                (y..d).all(|z| {
                    let row = self.coboundary_equation(x, y, z);
                    row.iter()
                        .fold(field.zero(), |acc, (c, r)| {
                            &acc + &(r * f.coefficients.get(c).unwrap_or(&field.zero()))
                        })
                        .is_zero()
                })
            })
        })
    }

    /// `sdim Z^2 - sdim B^2`, after checking `B^2 ⊆ Z^2`.
    pub fn multiplier_sdim(&self) -> Result<SuperDim> {
        let z = self.cocycles();
        let b = self.coboundaries();
        for parity in Parity::BOTH {
            for v in b.echelon(parity).rows() {
                if !z.contains(v)? {
                    return Err(Error::CoboundaryNotCocycle(parity.bit()));
                }
            }
        }
        Ok(z.sdim() - b.sdim())
    }
}

pub fn cochain2_basis(algebra: &LieSuperalgebra, parity: Parity) -> Vec<Cochain2> {
    CochainSpace::new(algebra).basis(parity)
}

pub fn cocycle_space(algebra: &LieSuperalgebra, parity: Parity) -> GradedSubspace {
    CochainSpace::new(algebra).cocycle_space(parity)
}

pub fn coboundary_space(algebra: &LieSuperalgebra, parity: Parity) -> GradedSubspace {
    CochainSpace::new(algebra).coboundary_space(parity)
}

/// Multiplier superdimension computed as graded `H^2(L; F)`.
pub fn multiplier_sdim(algebra: &LieSuperalgebra) -> Result<SuperDim> {
    CochainSpace::new(algebra).multiplier_sdim()
}

/// Upper bound `(s(s-1)/2 + t(t+1)/2 + s, st)` on the kernel of any stem
/// extension of an algebra of superdimension `(s, t)`.
pub fn kernel_bound(sdim: SuperDim) -> SuperDim {
    let (s, t) = (sdim.even, sdim.odd);
    SuperDim::new(s * s.saturating_sub(1) / 2 + t * (t + 1) / 2 + s, s * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraBuilder;
    use crate::scalar::Field;

    fn abelian(s: usize, t: usize) -> LieSuperalgebra {
        let mut b = AlgebraBuilder::new(Field::Rational);
        for i in 0..s {
            b.even(format!("x{i}"));
        }
        for j in 0..t {
            b.odd(format!("y{j}"));
        }
        b.build().unwrap()
    }

    fn h1() -> LieSuperalgebra {
        let mut b = AlgebraBuilder::new(Field::Rational);
        let u = b.even("u1");
        let z = b.odd("z");
        let w = b.odd("w1");
        b.bracket_ints(u, w, &[(z, 1)]);
        b.build().unwrap()
    }

    #[test]
    fn cochain_dimensions() {
        let a = abelian(1, 2);
        assert_eq!(cochain2_basis(&a, Parity::Even).len(), 3);
        assert_eq!(cochain2_basis(&a, Parity::Odd).len(), 2);
        let a = abelian(2, 0);
        assert_eq!(cochain2_basis(&a, Parity::Even).len(), 1);
        assert_eq!(cochain2_basis(&a, Parity::Odd).len(), 0);
        let a = abelian(0, 1);
        assert_eq!(cochain2_basis(&a, Parity::Even).len(), 1);
        assert_eq!(cochain2_basis(&a, Parity::Odd).len(), 0);
    }

    #[test]
    fn abelian_everything_is_a_cocycle() {
        let a = abelian(2, 2);
        let cs = CochainSpace::new(&a);
        assert_eq!(cs.cocycles().sdim(), cs.grading().sdim());
        assert!(cs.coboundaries().is_zero());
    }

    #[test]
    fn h1_cocycles() {
        let h = h1();
        let cs = CochainSpace::new(&h);
        assert_eq!(cs.cocycles().sdim(), SuperDim::new(1, 2));
        assert_eq!(cs.coboundaries().sdim(), SuperDim::new(0, 1));
        assert_eq!(cs.multiplier_sdim().unwrap(), SuperDim::new(1, 1));
    }

    #[test]
    fn cocycle_basis_vectors_pass_pointwise_check() {
        let h = h1();
        let cs = CochainSpace::new(&h);
        let z = cs.cocycles();
        for parity in Parity::BOTH {
            for v in z.echelon(parity).rows() {
                let f = Cochain2 { parity, coefficients: v.clone() };
                assert!(cs.is_cocycle(&f));
            }
        }
        // δf(u, w, w) = 2 f(z, w)
        let zw = cs.coordinate(1, 2).unwrap().0;
        let f = Cochain2 { parity: Parity::Even, coefficients: SparseVec::unit(zw, Field::Rational) };
        assert!(!cs.is_cocycle(&f));
    }

    #[test]
    fn kernel_bound_examples() {
        assert_eq!(kernel_bound(SuperDim::new(1, 2)), SuperDim::new(4, 2));
        assert_eq!(kernel_bound(SuperDim::ZERO), SuperDim::ZERO);
        assert_eq!(kernel_bound(SuperDim::new(3, 0)), SuperDim::new(6, 0));
    }

    #[test]
    fn evaluate_respects_super_antisymmetry() {
        let a = abelian(1, 2);
        let cs = CochainSpace::new(&a);
        let q = Field::Rational;
        for parity in Parity::BOTH {
            for f in cs.basis(parity) {
                for i in 0..3 {
                    for j in 0..3 {
                        let fij = cs.evaluate(&f, &a.unit(i), &a.unit(j));
                        let fji = cs.evaluate(&f, &a.unit(j), &a.unit(i));
                        let sign = -a.parity(i).koszul(a.parity(j));
                        assert_eq!(fji, fij.signed(sign));
                        if (a.parity(i) + a.parity(j)) != parity {
                            assert_eq!(fij, q.zero());
                        }
                    }
                }
            }
        }
    }
}
