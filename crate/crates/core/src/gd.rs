//! The family `g_d` of 4d-dimensional two-step nilpotent Lie algebras and
//! its exact formulas: brackets, the cortex polynomial `Q_d`, the
//! invariant-ring generators, the expected jump set, and the cross-section
//! map on the layer `z_1 != 0`.
//!
//! Basis order is frozen to the blocks `(Z_1..Z_d, Y_1..Y_2d, X_1..X_d)`;
//! every coordinate index in files and reports uses this ordering.

use num_traits::Zero;

use crate::coadjoint::{Covector, JumpIndexSet};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rat, SparsePoly};
use crate::liealg::LieAlgebra;

/// 0-based position of `Z_i` (1-based `i`).
pub fn pos_z(_d: usize, i: usize) -> usize {
    i - 1
}

/// 0-based position of `Y_j` (1-based `j`).
pub fn pos_y(d: usize, j: usize) -> usize {
    d + j - 1
}

/// 0-based position of `X_k` (1-based `k`).
pub fn pos_x(d: usize, k: usize) -> usize {
    3 * d + k - 1
}

/// Dual-coordinate names `z1..zd, y1..y2d, x1..xd`.
pub fn coordinate_names(d: usize) -> Vec<String> {
    let mut names = Vec::with_capacity(4 * d);
    names.extend((1..=d).map(|i| format!("z{i}")));
    names.extend((1..=2 * d).map(|j| format!("y{j}")));
    names.extend((1..=d).map(|k| format!("x{k}")));
    names
}

/// The algebra `g_d` together with its parameter.
#[derive(Clone, Debug)]
pub struct GdDescriptor {
    d: usize,
    algebra: LieAlgebra,
}

impl GdDescriptor {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        4 * self.d
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Split dual coordinates into the `(z, y, x)` blocks.
    pub fn split<'a>(&self, ell: &'a Covector) -> Result<(&'a [Rat], &'a [Rat], &'a [Rat])> {
        let d = self.d;
        if ell.dim() != 4 * d {
            return Err(Error::DimensionMismatch {
                expected: 4 * d,
                got: ell.dim(),
            });
        }
        let c = ell.coords();
        Ok((&c[..d], &c[d..3 * d], &c[3 * d..]))
    }
}

/// Build `g_d`: brackets `[X_i, Y_{2i-1}] = Z_1` (i = 1..d),
/// `[X_k, Y_{2k}] = Z_{k+1}` (k = 1..d-1), and
/// `[X_d, Y_{2d}] = Z_2 + ... + Z_d`.
pub fn make_gd(d: usize) -> Result<GdDescriptor> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    let n = 4 * d;
    let mut basis = Vec::with_capacity(n);
    basis.extend((1..=d).map(|i| format!("Z{i}")));
    basis.extend((1..=2 * d).map(|j| format!("Y{j}")));
    basis.extend((1..=d).map(|k| format!("X{k}")));

    // Stored with i < j, so the Y slot comes first and the coefficient
    // flips sign: [Y_{2i-1}, X_i] = -Z_1, etc.
    let mut entries = Vec::new();
    for i in 1..=d {
        entries.push((pos_y(d, 2 * i - 1), pos_x(d, i), vec![(pos_z(d, 1), rat(-1))]));
    }
    for k in 1..d {
        entries.push((pos_y(d, 2 * k), pos_x(d, k), vec![(pos_z(d, k + 1), rat(-1))]));
    }
    entries.push((
        pos_y(d, 2 * d),
        pos_x(d, d),
        (2..=d).map(|m| (pos_z(d, m), rat(-1))).collect(),
    ));

    let algebra = LieAlgebra::new(n, basis, entries)?;
    let report = algebra.validate();
    assert!(
        report.jacobi_ok && report.two_step,
        "g_d construction must validate two-step"
    );
    Ok(GdDescriptor { d, algebra })
}

/// The degree-d cortex polynomial
/// `Q_d = y_{2d-1} (sum_i y_{2i} prod_{j != i} y_{2j-1}) - y_{2d} prod_j y_{2j-1}`
/// over the full dual coordinate space (supported on the y block only).
#[derive(Clone, Debug)]
pub struct CortexPolyQd {
    d: usize,
    poly: SparsePoly,
}

impl CortexPolyQd {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn poly(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn eval(&self, ell: &Covector) -> Result<Rat> {
        self.poly.eval(ell.coords())
    }
}

pub fn cortex_poly(d: usize) -> Result<CortexPolyQd> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    let n = 4 * d;
    let mut poly = SparsePoly::zero(n);
    for i in 1..d {
        let mut exps = vec![0u16; n];
        exps[pos_y(d, 2 * d - 1)] += 1;
        exps[pos_y(d, 2 * i)] += 1;
        for j in 1..d {
            if j != i {
                exps[pos_y(d, 2 * j - 1)] += 1;
            }
        }
        poly.add_term(exps, rat(1));
    }
    let mut exps = vec![0u16; n];
    exps[pos_y(d, 2 * d)] += 1;
    for j in 1..d {
        exps[pos_y(d, 2 * j - 1)] += 1;
    }
    poly.add_term(exps, rat(-1));

    debug_assert!(poly.is_homogeneous_of_degree(d as u16));
    debug_assert_eq!(poly.num_terms(), d);
    Ok(CortexPolyQd { d, poly })
}

/// Generators of the invariant polynomial ring of `g_d`, in the fixed
/// order `z_1, ..., z_d`, then `z_1 y_{2k} - z_{k+1} y_{2k-1}` for
/// `k = 1..d-1`, then `z_1 y_{2d} - (z_2 + ... + z_d) y_{2d-1}`.
#[derive(Clone, Debug)]
pub struct InvariantGenerators {
    d: usize,
    gens: Vec<SparsePoly>,
}

impl InvariantGenerators {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[SparsePoly] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }
}

pub fn invariant_generators(d: usize) -> Result<InvariantGenerators> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    let n = 4 * d;
    let mut gens = Vec::with_capacity(2 * d);
    for i in 1..=d {
        gens.push(SparsePoly::var(n, pos_z(d, i))?);
    }
    for k in 1..d {
        let mut p = SparsePoly::zero(n);
        let mut e1 = vec![0u16; n];
        e1[pos_z(d, 1)] = 1;
        e1[pos_y(d, 2 * k)] = 1;
        p.add_term(e1, rat(1));
        let mut e2 = vec![0u16; n];
        e2[pos_z(d, k + 1)] = 1;
        e2[pos_y(d, 2 * k - 1)] = 1;
        p.add_term(e2, rat(-1));
        gens.push(p);
    }
    let mut last = SparsePoly::zero(n);
    let mut e1 = vec![0u16; n];
    e1[pos_z(d, 1)] = 1;
    e1[pos_y(d, 2 * d)] = 1;
    last.add_term(e1, rat(1));
    for m in 2..=d {
        let mut e = vec![0u16; n];
        e[pos_z(d, m)] = 1;
        e[pos_y(d, 2 * d - 1)] = 1;
        last.add_term(e, rat(-1));
    }
    gens.push(last);

    debug_assert_eq!(gens.len(), 2 * d);
    Ok(InvariantGenerators { d, gens })
}

/// A point of the cross-section: supported on `(Z_*, Y_2, Y_4, ..., Y_2d)`
/// with `z_1 != 0`; every jump-index coordinate is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSectionPoint {
    point: Covector,
}

impl CrossSectionPoint {
    pub fn covector(&self) -> &Covector {
        &self.point
    }

    pub fn into_covector(self) -> Covector {
        self.point
    }
}

/// Project `l` in the layer `z_1 != 0` onto the cross-section along its
/// orbit: keep `z`, zero the odd `y` and all `x` coordinates, and replace
/// the even `y` coordinates by the orbit invariants
/// `y_{2i} - (z_{i+1}/z_1) y_{2i-1}` and
/// `y_{2d} - ((z_2+...+z_d)/z_1) y_{2d-1}`.
pub fn cross_section_map(d: usize, ell: &Covector) -> Result<CrossSectionPoint> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    let n = 4 * d;
    if ell.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: ell.dim(),
        });
    }
    let z1 = ell.coord(pos_z(d, 1));
    if z1.is_zero() {
        return Err(Error::OutOfLayer);
    }
    let mut out = vec![Rat::zero(); n];
    for i in 1..=d {
        out[pos_z(d, i)] = ell.coord(pos_z(d, i)).clone();
    }
    for i in 1..d {
        let ratio = ell.coord(pos_z(d, i + 1)) / z1;
        out[pos_y(d, 2 * i)] =
            ell.coord(pos_y(d, 2 * i)) - &(&ratio * ell.coord(pos_y(d, 2 * i - 1)));
    }
    let mut ztail = Rat::zero();
    for m in 2..=d {
        ztail += ell.coord(pos_z(d, m));
    }
    let ratio = &ztail / z1;
    out[pos_y(d, 2 * d)] =
        ell.coord(pos_y(d, 2 * d)) - &(&ratio * ell.coord(pos_y(d, 2 * d - 1)));
    Ok(CrossSectionPoint {
        point: Covector::new(out),
    })
}

/// The jump set of the layer `z_1 != 0`:
/// `{d+1, d+3, ..., 3d-1}` (odd `Y` positions) plus `{3d+1, ..., 4d}`
/// (all `X` positions), 1-based.
pub fn expected_jump_set(d: usize) -> Result<JumpIndexSet> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    let mut indices: Vec<usize> = (1..=d).map(|t| d + 2 * t - 1).collect();
    indices.extend(3 * d + 1..=4 * d);
    Ok(JumpIndexSet::from_sorted(indices))
}
