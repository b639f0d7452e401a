//! The coadjoint action for two-step algebras: the skew form `M(l)`,
//! orbit dimension, tangent spaces, jump indices, and the generic-layer
//! predicate.
//!
//! Sign convention, fixed once: `(ad*_X l)(Y) = -l([X, Y])`.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmath::{format_rat_list, parse_rat, Rat, RatMatrix};
use crate::liealg::{LieAlgebra, Subspace};

/// A point of the dual space in dual-basis coordinates. For `g_d` the
/// coordinate order is `(z_1..z_d, y_1..y_2d, x_1..x_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Covector {
    coords: Vec<Rat>,
}

impl Covector {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![Rat::zero(); dim],
        }
    }

    /// The dual basis vector `U_i*` (0-based `i`).
    pub fn basis_dual(dim: usize, i: usize) -> Self {
        let mut c = vec![Rat::zero(); dim];
        c[i] = crate::exactmath::rat(1);
        Self { coords: c }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rat {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rat::is_zero)
    }

    /// `l(v)` for a vector `v` of the algebra.
    pub fn pairing(&self, v: &[Rat]) -> Result<Rat> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        let mut acc = Rat::zero();
        for (c, x) in self.coords.iter().zip(v) {
            if !c.is_zero() && !x.is_zero() {
                acc += c * x;
            }
        }
        Ok(acc)
    }

    /// Pairing with a sparse vector `[(index, coeff)]`.
    pub fn pairing_sparse(&self, v: &[(usize, Rat)]) -> Rat {
        let mut acc = Rat::zero();
        for (k, c) in v {
            if !self.coords[*k].is_zero() {
                acc += &self.coords[*k] * c;
            }
        }
        acc
    }

    pub fn add(&self, other: &Covector) -> Covector {
        assert_eq!(self.dim(), other.dim(), "covector dimension");
        Covector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Covector) -> Covector {
        assert_eq!(self.dim(), other.dim(), "covector dimension");
        Covector::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Covector {
        Covector::new(self.coords.iter().map(|a| a * c).collect())
    }

    /// Parse comma- or whitespace-separated rational coordinates.
    pub fn parse(s: &str) -> Result<Covector> {
        let parts: Vec<&str> = s
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|p| !p.is_empty())
            .collect();
        if parts.is_empty() {
            return Err(Error::ParseCovector("no coordinates given".into()));
        }
        let coords = parts
            .iter()
            .map(|p| parse_rat(p))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| Error::ParseCovector(e.to_string()))?;
        Ok(Covector::new(coords))
    }

    /// Comma-joined rational strings; round-trips through [`Self::parse`].
    pub fn to_csv_string(&self) -> String {
        format_rat_list(&self.coords)
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_csv_string())
    }
}

/// The matrix `M(l)` with entries `l([U_i, U_j])`; exactly antisymmetric,
/// so its rank (the orbit dimension) is even.
#[derive(Clone, Debug)]
pub struct SkewForm {
    matrix: RatMatrix,
}

impl SkewForm {
    pub fn matrix(&self) -> &RatMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

/// `(ad*_x l)(Y) = -l([x, Y])`, linear in both arguments.
pub fn ad_star(alg: &LieAlgebra, x: &[Rat], ell: &Covector) -> Result<Covector> {
    let n = alg.dim();
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    if ell.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: ell.dim(),
        });
    }
    let mut out = vec![Rat::zero(); n];
    for (i, j, coeffs) in alg.bracket_entries() {
        let v = ell.pairing_sparse(coeffs);
        if v.is_zero() {
            continue;
        }
        // contribution of [U_i, U_j]: out_j -= x_i v, out_i += x_j v
        if !x[i].is_zero() {
            let t = &x[i] * &v;
            out[j] = &out[j] - &t;
        }
        if !x[j].is_zero() {
            let t = &x[j] * &v;
            out[i] = &out[i] + &t;
        }
    }
    Ok(Covector::new(out))
}

/// `Ad*_{exp x} l = l + ad*_x l`; exact only in nilpotency class <= 2, so
/// anything deeper is refused rather than silently truncated.
pub fn coadjoint_exp(alg: &LieAlgebra, x: &[Rat], ell: &Covector) -> Result<Covector> {
    let report = alg.validate();
    if !report.jacobi_ok {
        return Err(Error::InvalidAlgebra(match report.jacobi_witness {
            Some((i, j, k)) => format!("Jacobi identity fails at basis triple ({i}, {j}, {k})"),
            None => "Jacobi identity fails".to_string(),
        }));
    }
    if !report.two_step {
        return Err(Error::NotTwoStep(match report.nilpotency_class {
            Some(c) => format!("nilpotency class {c}"),
            None => "not nilpotent".to_string(),
        }));
    }
    Ok(ell.add(&ad_star(alg, x, ell)?))
}

/// Assemble `M(l)`.
pub fn skew_form(alg: &LieAlgebra, ell: &Covector) -> Result<SkewForm> {
    let n = alg.dim();
    if ell.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: ell.dim(),
        });
    }
    let mut m = RatMatrix::zeros(n, n);
    for (i, j, coeffs) in alg.bracket_entries() {
        let v = ell.pairing_sparse(coeffs);
        if v.is_zero() {
            continue;
        }
        m.set(i, j, v.clone());
        m.set(j, i, -v);
    }
    debug_assert!(m.is_antisymmetric());
    Ok(SkewForm { matrix: m })
}

/// Rank of the skew form = dim of the tangent space to the orbit at `l`.
pub fn orbit_dimension(alg: &LieAlgebra, ell: &Covector) -> Result<usize> {
    Ok(skew_form(alg, ell)?.rank())
}

/// Basis of `{ad*_{U_b} l : b = 1..n}` by exact rank selection in basis
/// order.
pub fn tangent_space(alg: &LieAlgebra, ell: &Covector) -> Result<Subspace> {
    let n = alg.dim();
    let m = skew_form(alg, ell)?;
    let rows = (0..n).map(|b| {
        m.matrix()
            .row(b)
            .iter()
            .map(|c| -c)
            .collect::<Vec<Rat>>()
    });
    Ok(Subspace::from_spanning(n, rows.collect::<Vec<_>>()))
}

/// Basis positions (1-based) where the incremental row rank of `M(l)`
/// increases; the cardinality equals the orbit dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpIndexSet {
    indices: Vec<usize>,
}

impl JumpIndexSet {
    pub fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

impl fmt::Display for JumpIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}}}",
            self.indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

pub fn jump_indices(alg: &LieAlgebra, ell: &Covector) -> Result<JumpIndexSet> {
    let m = skew_form(alg, ell)?;
    let ranks = m.matrix().incremental_row_ranks();
    let mut indices = Vec::new();
    let mut prev = 0;
    for (row, &r) in ranks.iter().enumerate() {
        if r > prev {
            indices.push(row + 1);
        }
        prev = r;
    }
    Ok(JumpIndexSet::from_sorted(indices))
}

/// The layer `Omega_d = { l : z_1 != 0 }` of the family `g_d`.
pub fn layer_predicate_gd(d: usize, ell: &Covector) -> Result<bool> {
    if ell.dim() != 4 * d {
        return Err(Error::DimensionMismatch {
            expected: 4 * d,
            got: ell.dim(),
        });
    }
    Ok(!ell.coord(0).is_zero())
}
