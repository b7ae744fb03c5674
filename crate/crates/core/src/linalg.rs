//! Sparse exact vectors and incremental reduced row echelon forms.

use std::collections::BTreeMap;

use crate::scalar::{Field, Scalar};

/// Sparse coordinate vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn zero() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit(index: usize, field: Field) -> Self {
        SparseVec { entries: vec![(index, field.one())] }
    }

    /// Builds from arbitrary `(index, value)` pairs, summing duplicates.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Scalar)>>(pairs: I) -> Self {
        let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (i, v) in pairs {
            match acc.get_mut(&i) {
                Some(cur) => *cur = &*cur + &v,
                None => {
                    acc.insert(i, v);
                }
            }
        }
        SparseVec {
            entries: acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, dim: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn get(&self, index: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&index, |(i, _)| *i)
            .ok()
            .map(|pos| &self.entries[pos].1)
    }

    pub fn leading(&self) -> Option<(usize, &Scalar)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> SparseVec {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, -v)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &SparseVec) -> SparseVec {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + &(y * c);
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        SparseVec { entries: out }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&v.field().one(), other),
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        match other.entries.first() {
            None => self.clone(),
            Some((_, v)) => self.add_scaled(&-v.field().one(), other),
        }
    }

    /// Re-indexes entries through `f`; entries mapped to `None` are dropped.
    pub fn remap<F: Fn(usize) -> Option<usize>>(&self, f: F) -> SparseVec {
        SparseVec::from_pairs(
            self.entries
                .iter()
                .filter_map(|(i, v)| f(*i).map(|j| (j, v.clone()))),
        )
    }
}

/// Accumulates `c * v` terms without re-merging on every addition.
#[derive(Default)]
pub(crate) struct Accumulator {
    acc: BTreeMap<usize, Scalar>,
}

impl Accumulator {
    pub fn add_scaled(&mut self, c: &Scalar, v: &SparseVec) {
        for (i, x) in v.iter() {
            let term = x * c;
            match self.acc.get_mut(&i) {
                Some(cur) => *cur = &*cur + &term,
                None => {
                    self.acc.insert(i, term);
                }
            }
        }
    }

    pub fn add_term(&mut self, i: usize, c: Scalar) {
        match self.acc.get_mut(&i) {
            Some(cur) => *cur = &*cur + &c,
            None => {
                self.acc.insert(i, c);
            }
        }
    }

    pub fn finish(self) -> SparseVec {
        SparseVec {
            entries: self.acc.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }
}

/// Reduced row echelon form maintained under insertion.
///
/// Rows are normalized (leading coefficient 1), sorted by pivot, and every
/// pivot column is zero in all other rows. Equal spans give equal forms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Echelon {
    rows: Vec<SparseVec>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon { rows: Vec::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(vectors: I) -> Self {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.leading().expect("nonzero row").0)
    }

    fn pivot_row(&self, col: usize) -> Option<usize> {
        self.rows
            .binary_search_by_key(&col, |r| r.leading().expect("nonzero row").0)
            .ok()
    }

    /// Remainder of `v` after eliminating all pivot columns.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let Some((_, lead)) = v.leading() else {
            return SparseVec::zero();
        };
        let mut acc = Accumulator::default();
        acc.add_scaled(&lead.field().one(), v);
        for (col, c) in v.iter() {
            if let Some(r) = self.pivot_row(col) {
                acc.add_scaled(&-c, &self.rows[r]);
            }
        }
        acc.finish()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns the new pivot column if the rank grew.
    pub fn insert(&mut self, v: &SparseVec) -> Option<usize> {
        let r = self.reduce(v);
        let (pivot, lead) = r.leading()?;
        let row = r.scale(&lead.inv().expect("nonzero"));
        for existing in self.rows.iter_mut() {
            if let Some(c) = existing.get(pivot).cloned() {
                *existing = existing.add_scaled(&-c, &row);
            }
        }
        let pos = self
            .rows
            .partition_point(|x| x.leading().expect("nonzero row").0 < pivot);
        self.rows.insert(pos, row);
        Some(pivot)
    }

    /// Coordinates of `v` relative to the rows, if `v` is in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<SparseVec> {
        if !self.contains(v) {
            return None;
        }
        Some(SparseVec::from_pairs(v.iter().filter_map(|(col, c)| {
            self.pivot_row(col).map(|r| (r, c.clone()))
        })))
    }

    /// Basis of the solution space `{x : row . x = 0 for every row}` in
    /// `ncols` unknowns, one vector per free column.
    pub fn nullspace(&self, ncols: usize, field: Field) -> Vec<SparseVec> {
        let pivots: Vec<usize> = self.pivots().collect();
        let mut is_pivot = vec![false; ncols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        // column f of the RREF, gathered per free column
        let mut columns: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
        for (r, row) in self.rows.iter().enumerate() {
            for (col, c) in row.iter() {
                if !is_pivot[col] {
                    columns.entry(col).or_default().push((pivots[r], -c));
                }
            }
        }
        (0..ncols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut pairs = columns.remove(&f).unwrap_or_default();
                pairs.push((f, field.one()));
                SparseVec::from_pairs(pairs)
            })
            .collect()
    }
}

/// Echelon form that remembers how each row combines the accepted inputs.
///
/// Accepted (independent) inputs are numbered `0, 1, ...` in insertion order;
/// rejected inputs yield a linear dependency among the accepted ones.
#[derive(Clone, Debug)]
pub struct TrackedEchelon {
    field: Field,
    rows: Vec<(SparseVec, SparseVec)>,
    pivots: Vec<usize>,
    accepted: usize,
}

pub enum Insertion {
    /// Input became basis element `index`.
    Accepted(usize),
    /// Input equals this combination of accepted elements.
    Dependent(SparseVec),
}

impl TrackedEchelon {
    pub fn new(field: Field) -> Self {
        TrackedEchelon {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
            accepted: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.accepted
    }

    pub fn is_empty(&self) -> bool {
        self.accepted == 0
    }

    /// Reduces `v`; returns (remainder, combination of accepted elements
    /// that was subtracted).
    fn reduce(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        // each row is zero at the pivots of earlier rows, so one pass in
        // insertion order clears every pivot column
        let mut rem = v.clone();
        let mut combo = Accumulator::default();
        for ((row, rc), &p) in self.rows.iter().zip(&self.pivots) {
            if let Some(c) = rem.get(p).cloned() {
                rem = rem.add_scaled(&-&c, row);
                combo.add_scaled(&c, rc);
            }
        }
        (rem, combo.finish())
    }

    pub fn insert(&mut self, v: &SparseVec) -> Insertion {
        let (rem, combo) = self.reduce(v);
        match rem.leading() {
            None => Insertion::Dependent(combo),
            Some((pivot, lead)) => {
                let idx = self.accepted;
                self.accepted += 1;
                let inv = lead.inv().expect("nonzero");
                // rem = v - combo, so row = (e_idx - combo) / lead
                let rc = SparseVec::unit(idx, self.field).sub(&combo).scale(&inv);
                self.pivots.push(pivot);
                self.rows.push((rem.scale(&inv), rc));
                Insertion::Accepted(idx)
            }
        }
    }

    /// Expresses `v` in the accepted elements, if it lies in their span.
    pub fn express(&self, v: &SparseVec) -> Option<SparseVec> {
        let (rem, combo) = self.reduce(v);
        rem.is_zero().then_some(combo)
    }
}

/// Kernel of the linear map sending input basis vector `i` to `images[i]`.
pub fn kernel_of_images(images: &[SparseVec], field: Field) -> Vec<SparseVec> {
    let mut te = TrackedEchelon::new(field);
    let mut accepted_input = Vec::new();
    let mut kernel = Vec::new();
    for (i, img) in images.iter().enumerate() {
        match te.insert(img) {
            Insertion::Accepted(_) => accepted_input.push(i),
            Insertion::Dependent(combo) => {
                let k = combo
                    .remap(|a| Some(accepted_input[a]))
                    .neg()
                    .add(&SparseVec::unit(i, field));
                kernel.push(k);
            }
        }
    }
    kernel
}
