//! Parity-split subspaces of a graded coordinate space.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Field;
use crate::superdim::{Parity, SuperDim};

/// Parity of each coordinate of an ambient space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    parities: Arc<[Parity]>,
    field: Field,
}

impl Grading {
    pub fn new(parities: Vec<Parity>, field: Field) -> Self {
        Grading {
            parities: parities.into(),
            field,
        }
    }

    pub fn len(&self) -> usize {
        self.parities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parities.is_empty()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn sdim(&self) -> SuperDim {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        SuperDim::new(self.parities.len() - odd, odd)
    }

    /// Parity of a nonzero homogeneous vector; `Ok(None)` for zero.
    pub fn parity_of(&self, v: &SparseVec) -> Result<Option<Parity>> {
        let mut found = None;
        for (i, _) in v.iter() {
            if i >= self.len() {
                return Err(Error::IndexOutOfRange { index: i, dim: self.len() });
            }
            let p = self.parities[i];
            match found {
                None => found = Some(p),
                Some(q) if q != p => return Err(Error::MixedParity),
                _ => {}
            }
        }
        Ok(found)
    }

    /// Splits a vector into its even and odd parts.
    pub fn split(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let even = SparseVec::from_pairs(
            v.iter()
                .filter(|(i, _)| !self.parities[*i].is_odd())
                .map(|(i, c)| (i, c.clone())),
        );
        (even.clone(), v.sub(&even))
    }
}

/// Subspace spanned by parity-homogeneous vectors, stored as one canonical
/// reduced echelon form per parity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedSubspace {
    host: Grading,
    even: Echelon,
    odd: Echelon,
}

impl GradedSubspace {
    pub fn zero(host: &Grading) -> Self {
        GradedSubspace {
            host: host.clone(),
            even: Echelon::new(),
            odd: Echelon::new(),
        }
    }

    pub fn full(host: &Grading) -> Self {
        let units: Vec<SparseVec> = (0..host.len()).map(|i| SparseVec::unit(i, host.field())).collect();
        Self::echelonize(&units, host).expect("unit vectors are homogeneous")
    }

    /// Canonical subspace spanned by `vectors`.
    pub fn echelonize(vectors: &[SparseVec], host: &Grading) -> Result<Self> {
        let mut s = Self::zero(host);
        for v in vectors {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Adds a homogeneous vector to the span.
    pub fn insert(&mut self, v: &SparseVec) -> Result<bool> {
        Ok(match self.host.parity_of(v)? {
            None => false,
            Some(Parity::Even) => self.even.insert(v).is_some(),
            Some(Parity::Odd) => self.odd.insert(v).is_some(),
        })
    }

    pub fn host(&self) -> &Grading {
        &self.host
    }

    pub fn field(&self) -> Field {
        self.host.field()
    }

    pub fn host_dim(&self) -> SuperDim {
        self.host.sdim()
    }

    pub fn sdim(&self) -> SuperDim {
        SuperDim::new(self.even.rank(), self.odd.rank())
    }

    pub fn dim(&self) -> usize {
        self.even.rank() + self.odd.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn echelon(&self, parity: Parity) -> &Echelon {
        match parity {
            Parity::Even => &self.even,
            Parity::Odd => &self.odd,
        }
    }

    pub fn even_basis(&self) -> &[SparseVec] {
        self.even.rows()
    }

    pub fn odd_basis(&self) -> &[SparseVec] {
        self.odd.rows()
    }

    /// Canonical basis: even rows, then odd rows.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.even.rows().iter().chain(self.odd.rows())
    }

    fn check_host(&self, other: &GradedSubspace) -> Result<()> {
        if self.host != other.host {
            return Err(Error::HostMismatch(self.host_dim(), other.host_dim()));
        }
        Ok(())
    }

    /// Membership for an arbitrary (not necessarily homogeneous) vector.
    pub fn contains(&self, v: &SparseVec) -> Result<bool> {
        if let Some(m) = v.max_index() {
            if m >= self.host.len() {
                return Err(Error::IndexOutOfRange { index: m, dim: self.host.len() });
            }
        }
        let (e, o) = self.host.split(v);
        Ok(self.even.contains(&e) && self.odd.contains(&o))
    }

    pub fn is_subspace_of(&self, other: &GradedSubspace) -> Result<bool> {
        self.check_host(other)?;
        Ok(self
            .basis()
            .all(|v| other.contains(v).expect("same host")))
    }

    pub fn sum(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_host(other)?;
        let mut s = self.clone();
        for v in other.basis() {
            s.insert(v)?;
        }
        Ok(s)
    }

    /// Intersection by the Zassenhaus construction on each parity block.
    pub fn intersect(&self, other: &GradedSubspace) -> Result<GradedSubspace> {
        self.check_host(other)?;
        let n = self.host.len();
        let mut out = GradedSubspace::zero(&self.host);
        for parity in Parity::BOTH {
            let mut z = Echelon::new();
            for v in self.echelon(parity).rows() {
                z.insert(&v.add(&v.remap(|i| Some(i + n))));
            }
            for w in other.echelon(parity).rows() {
                z.insert(w);
            }
            for row in z.rows() {
                if row.leading().expect("nonzero").0 >= n {
                    out.insert(&row.remap(|i| i.checked_sub(n)))?;
                }
            }
        }
        Ok(out)
    }

    /// Supplementary subspace spanned by the unit vectors at non-pivot
    /// coordinates of each parity block.
    pub fn complement(&self) -> GradedSubspace {
        let mut taken = vec![false; self.host.len()];
        for p in self.even.pivots().chain(self.odd.pivots()) {
            taken[p] = true;
        }
        let units: Vec<SparseVec> = (0..self.host.len())
            .filter(|&i| !taken[i])
            .map(|i| SparseVec::unit(i, self.field()))
            .collect();
        GradedSubspace::echelonize(&units, &self.host).expect("unit vectors are homogeneous")
    }

    /// Coordinates not used as pivots, in increasing order.
    pub fn free_coordinates(&self) -> Vec<usize> {
        let mut taken = vec![false; self.host.len()];
        for p in self.even.pivots().chain(self.odd.pivots()) {
            taken[p] = true;
        }
        (0..self.host.len()).filter(|&i| !taken[i]).collect()
    }

    /// Representative of `v` modulo this subspace, supported on free coordinates.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let (e, o) = self.host.split(v);
        self.even.reduce(&e).add(&self.odd.reduce(&o))
    }
}

/// Free-function forms matching the operation names used elsewhere.
pub fn echelonize(vectors: &[SparseVec], host: &Grading) -> Result<GradedSubspace> {
    GradedSubspace::echelonize(vectors, host)
}

pub fn subspace_sum(x: &GradedSubspace, y: &GradedSubspace) -> Result<GradedSubspace> {
    x.sum(y)
}

pub fn subspace_intersect(x: &GradedSubspace, y: &GradedSubspace) -> Result<GradedSubspace> {
    x.intersect(y)
}

pub fn subspace_contains(x: &GradedSubspace, v: &SparseVec) -> Result<bool> {
    x.contains(v)
}

pub fn complement(x: &GradedSubspace) -> GradedSubspace {
    x.complement()
}
