//! Lie algebras presented by structure constants over an ordered basis.
//!
//! Brackets are stored only for basis pairs `i < j`; the `(j, i)` value is
//! synthesized by negation, which makes antisymmetry structural. Scalars
//! are exact rationals throughout.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::coadjoint::Covector;
use crate::error::{Error, Result};
use crate::exactmath::{parse_rat, Rat, RatMatrix};

/// Sparse coefficient vector of a bracket value, sorted by basis index.
pub type BracketCoeffs = Vec<(usize, Rat)>;

/// One bracket table definition `(i, j, [U_i, U_j])` with 0-based `i < j`.
pub type BracketDef = (usize, usize, BracketCoeffs);

/// A finite-dimensional Lie algebra given by structure constants.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    dim: usize,
    basis: Vec<String>,
    /// `[U_i, U_j]` for `i < j` only; the `(j, i)` value is synthesized.
    brackets: BTreeMap<(usize, usize), BracketCoeffs>,
    center_cache: OnceLock<Subspace>,
    validation_cache: OnceLock<ValidationReport>,
}

impl LieAlgebra {
    /// Build from 0-based bracket entries `(i, j, [(k, c), ...])` with
    /// `i < j`. Zero coefficients are dropped; duplicate pairs rejected.
    pub fn new(dim: usize, basis: Vec<String>, entries: Vec<BracketDef>) -> Result<Self> {
        if basis.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "{} basis labels for dimension {dim}",
                basis.len()
            )));
        }
        let mut brackets = BTreeMap::new();
        for (i, j, coeffs) in entries {
            if i >= j || j >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket pair ({i}, {j}) must satisfy i < j < dim (0-based)"
                )));
            }
            let mut vec: BracketCoeffs = coeffs
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            for (k, _) in &vec {
                if *k >= dim {
                    return Err(Error::InvalidAlgebra(format!(
                        "bracket ({i}, {j}) hits basis index {k} >= dim"
                    )));
                }
            }
            vec.sort_by_key(|(k, _)| *k);
            vec.dedup_by(|a, b| {
                if a.0 == b.0 {
                    b.1 = &b.1 + &a.1;
                    true
                } else {
                    false
                }
            });
            vec.retain(|(_, c)| !c.is_zero());
            if vec.is_empty() {
                continue;
            }
            if brackets.insert((i, j), vec).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate bracket entry for pair ({i}, {j})"
                )));
            }
        }
        Ok(Self {
            dim,
            basis,
            brackets,
            center_cache: OnceLock::new(),
            validation_cache: OnceLock::new(),
        })
    }

    /// With labels `U1..Un`.
    pub fn with_default_labels(dim: usize, entries: Vec<BracketDef>) -> Result<Self> {
        let basis = (1..=dim).map(|i| format!("U{i}")).collect();
        Self::new(dim, basis, entries)
    }

    /// The 3-dimensional Heisenberg algebra, basis `(X, Y, Z)` with
    /// `[X, Y] = Z`.
    pub fn heisenberg() -> Self {
        Self::new(
            3,
            vec!["X".into(), "Y".into(), "Z".into()],
            vec![(0, 1, vec![(2, crate::exactmath::rat(1))])],
        )
        .expect("fixed table")
    }

    /// The abelian algebra of the given dimension.
    pub fn abelian(dim: usize) -> Self {
        Self::with_default_labels(dim, Vec::new()).expect("no brackets")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis
    }

    /// Iterate stored bracket entries `(i, j, coefficients)` with `i < j`.
    pub fn bracket_entries(&self) -> impl Iterator<Item = (usize, usize, &[(usize, Rat)])> {
        self.brackets.iter().map(|(&(i, j), c)| (i, j, c.as_slice()))
    }

    /// `[U_i, U_j]` as a sparse coefficient vector, any index order.
    pub fn bracket_basis(&self, i: usize, j: usize) -> BracketCoeffs {
        if i == j {
            return Vec::new();
        }
        if i < j {
            self.brackets.get(&(i, j)).cloned().unwrap_or_default()
        } else {
            self.brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c)).collect())
                .unwrap_or_default()
        }
    }

    /// `[x, y]` by bilinear expansion through the structure constants.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>> {
        for v in [x, y] {
            if v.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![Rat::zero(); self.dim];
        for (&(i, j), coeffs) in &self.brackets {
            let f = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if f.is_zero() {
                continue;
            }
            for (k, c) in coeffs {
                out[*k] = &out[*k] + &(c * &f);
            }
        }
        Ok(out)
    }

    /// `[c, U_k]` for a sparse vector `c`.
    fn bracket_sparse_basis(&self, c: &[(usize, Rat)], k: usize) -> BracketCoeffs {
        let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
        for (m, cm) in c {
            for (p, cp) in self.bracket_basis(*m, k) {
                let e = acc.entry(p).or_insert_with(Rat::zero);
                *e = &*e + &(cm * &cp);
            }
        }
        acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
    }

    /// Jacobi check over all basis triples plus the lower central series.
    /// Failures are reported, never raised.
    pub fn validate(&self) -> &ValidationReport {
        self.validation_cache.get_or_init(|| self.compute_validation())
    }

    fn compute_validation(&self) -> ValidationReport {
        let n = self.dim;
        let mut jacobi_ok = true;
        let mut jacobi_witness = None;
        'outer: for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let bij = self.bracket_basis(i, j);
                    let bjk = self.bracket_basis(j, k);
                    let bki = self.bracket_basis(k, i);
                    if bij.is_empty() && bjk.is_empty() && bki.is_empty() {
                        continue;
                    }
                    let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
                    for (c, other) in [(&bij, k), (&bjk, i), (&bki, j)] {
                        for (p, cp) in self.bracket_sparse_basis(c, other) {
                            let e = acc.entry(p).or_insert_with(Rat::zero);
                            *e = &*e + &cp;
                        }
                    }
                    if acc.values().any(|v| !v.is_zero()) {
                        jacobi_ok = false;
                        jacobi_witness = Some((i + 1, j + 1, k + 1));
                        break 'outer;
                    }
                }
            }
        }

        // Lower central series g ⊇ [g, g] ⊇ [g, [g, g]] ⊇ ...
        let mut lower_central_dims = vec![n];
        let mut current = Subspace::full(n);
        let mut nilpotency_class = None;
        for step in 1..=n {
            let mut vecs = Vec::new();
            for i in 0..n {
                for s in current.basis() {
                    let mut e_i = vec![Rat::zero(); n];
                    e_i[i] = crate::exactmath::rat(1);
                    let v = self.bracket(&e_i, s).expect("dimensions agree");
                    if v.iter().any(|c| !c.is_zero()) {
                        vecs.push(v);
                    }
                }
            }
            let next = Subspace::from_spanning(n, vecs);
            lower_central_dims.push(next.dim());
            if next.dim() == 0 {
                nilpotency_class = Some(step);
                break;
            }
            if next.dim() == current.dim() {
                // stationary nonzero: not nilpotent
                break;
            }
            current = next;
        }

        let two_step = matches!(nilpotency_class, Some(c) if c <= 2);
        ValidationReport {
            jacobi_ok,
            jacobi_witness,
            nilpotency_class,
            lower_central_dims,
            two_step,
        }
    }

    /// The center, as the exact kernel of the stacked adjoint maps:
    /// `v` is central iff `[v, U_j] = 0` for every `j`.
    pub fn center(&self) -> &Subspace {
        self.center_cache.get_or_init(|| self.compute_center())
    }

    fn compute_center(&self) -> Subspace {
        let n = self.dim;
        let mut rows: Vec<Vec<Rat>> = Vec::new();
        for j in 0..n {
            // one constraint row per output coordinate k of [., U_j]
            let mut by_k: BTreeMap<usize, Vec<Rat>> = BTreeMap::new();
            for i in 0..n {
                for (k, c) in self.bracket_basis(i, j) {
                    by_k.entry(k).or_insert_with(|| vec![Rat::zero(); n])[i] = c;
                }
            }
            rows.extend(by_k.into_values());
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        let m = RatMatrix::from_rows(rows).expect("uniform row length");
        let (_, kernel) = m.rank_and_kernel();
        Subspace::from_spanning(n, kernel)
    }

    /// True iff `ell` annihilates every basis vector of the center.
    pub fn in_z_perp(&self, ell: &Covector) -> Result<bool> {
        if ell.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: ell.dim(),
            });
        }
        Ok(self
            .center()
            .basis()
            .iter()
            .all(|b| ell.pairing(b).expect("ambient dims match").is_zero()))
    }

    // ---- structure-constants file format -------------------------------

    pub fn to_file_record(&self) -> AlgebraFile {
        AlgebraFile {
            dim: self.dim,
            basis: self.basis.clone(),
            brackets: self
                .brackets
                .iter()
                .map(|(&(i, j), coeffs)| BracketEntry {
                    i: i + 1,
                    j: j + 1,
                    coeffs: coeffs
                        .iter()
                        .map(|(k, c)| (k + 1, c.to_string()))
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_file_record(record: &AlgebraFile) -> Result<Self> {
        let dim = record.dim;
        if record.basis.len() != dim {
            return Err(Error::ParseAlgebra(format!(
                "basis has {} labels but dim = {dim}",
                record.basis.len()
            )));
        }
        let mut entries = Vec::new();
        for e in &record.brackets {
            if e.i < 1 || e.j <= e.i || e.j > dim {
                return Err(Error::ParseAlgebra(format!(
                    "bracket indices ({}, {}) must satisfy 1 <= i < j <= dim",
                    e.i, e.j
                )));
            }
            let mut coeffs = Vec::new();
            for (k, s) in &e.coeffs {
                if *k < 1 || *k > dim {
                    return Err(Error::ParseAlgebra(format!(
                        "coefficient index {k} out of range 1..={dim}"
                    )));
                }
                coeffs.push((k - 1, parse_rat(s)?));
            }
            entries.push((e.i - 1, e.j - 1, coeffs));
        }
        Self::new(dim, record.basis.clone(), entries)
            .map_err(|err| Error::ParseAlgebra(err.to_string()))
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_file_record())
            .expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let record: AlgebraFile = serde_json::from_str(s)
            .map_err(|e| Error::ParseAlgebra(e.to_string()))?;
        Self::from_file_record(&record)
    }
}

/// Wire form of the structure-constants file. Indices are 1-based and
/// rationals are strings, exactly as written to disk.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BracketEntry {
    pub i: usize,
    pub j: usize,
    pub coeffs: BTreeMap<usize, String>,
}

/// Outcome of [`LieAlgebra::validate`].
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub jacobi_ok: bool,
    /// 1-based basis triple with nonzero cyclic sum, when Jacobi fails.
    pub jacobi_witness: Option<(usize, usize, usize)>,
    /// `None` when the lower central series stabilizes above zero.
    pub nilpotency_class: Option<usize>,
    pub lower_central_dims: Vec<usize>,
    pub two_step: bool,
}

/// A linear subspace given by an exactly independent basis.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    /// Echelonized copy of `basis` for membership reduction:
    /// (pivot column, normalized row), sorted by pivot column.
    echelon: Vec<(usize, Vec<Rat>)>,
}

impl Subspace {
    pub fn full(ambient: usize) -> Self {
        let basis: Vec<Vec<Rat>> = (0..ambient)
            .map(|i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = crate::exactmath::rat(1);
                v
            })
            .collect();
        Self::from_spanning(ambient, basis)
    }

    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
            echelon: Vec::new(),
        }
    }

    /// Keep the spanning vectors that increase rank, in input order.
    pub fn from_spanning(ambient: usize, vectors: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut out = Self::zero(ambient);
        for v in vectors {
            out.insert_if_independent(v);
        }
        out
    }

    fn reduce(&self, v: &mut [Rat]) {
        for (pc, pr) in &self.echelon {
            if v[*pc].is_zero() {
                continue;
            }
            let f = v[*pc].clone();
            for (t, p) in v[*pc..].iter_mut().zip(&pr[*pc..]) {
                if !p.is_zero() {
                    let s = p * &f;
                    *t = &*t - &s;
                }
            }
        }
    }

    fn insert_if_independent(&mut self, v: Vec<Rat>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension");
        let mut w = v.clone();
        self.reduce(&mut w);
        let Some(lead) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let pivot = w[lead].clone();
        for item in w.iter_mut().skip(lead) {
            if !item.is_zero() {
                *item = &*item / &pivot;
            }
        }
        let at = self.echelon.partition_point(|(pc, _)| *pc < lead);
        self.echelon.insert(at, (lead, w));
        self.basis.push(v);
        true
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension");
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Rat::is_zero)
    }

    pub fn same_span(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && other.basis.iter().all(|v| self.contains(v))
    }
}
