//! The cortex of the dual: image sampling, the symbolic vanishing
//! certificate for `Q_d`, exact membership for `g_d`, constructive witness
//! schedules, invariant-ring membership, the codimension classifier, and a
//! numeric closure approximator for arbitrary two-step algebras.
//!
//! Non-membership is always certified through the polynomial
//! characterization (`z = 0` and `Q_d = 0` is necessary because `Q_d`
//! vanishes identically on the image and hence on its closure); sampling
//! only ever supports positive density evidence.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde_json::json;

use crate::coadjoint::{ad_star, coadjoint_exp, orbit_dimension, Covector};
use crate::error::{Error, Result};
use crate::exactmath::{rat, Rat, SparsePoly};
use crate::gd::{cortex_poly, make_gd, pos_x, pos_y, pos_z, InvariantGenerators};
use crate::liealg::LieAlgebra;
use crate::sampling::{split_seed, RationalSampler, SplitMix64};

/// Radius (max norm) of the fixed ball the direction `X` is drawn from in
/// [`approximate_cortex`].
pub const X_BALL_RADIUS: f64 = 2.0;

/// `ad*_x(l)`: a point of the image set whose closure is the cortex.
/// Always lies in the annihilator of the center.
pub fn image_point(alg: &LieAlgebra, x: &[Rat], ell: &Covector) -> Result<Covector> {
    ad_star(alg, x, ell)
}

/// Compose `Q_d` with the tangent-space coordinates
/// `y_{2j-1} -> -a_j z_1`, `y_{2j} -> -a_j z_{j+1}` (j < d),
/// `y_{2d} -> -a_d (z_2 + ... + z_d)`, producing a polynomial in
/// `(a_1..a_d, z_1..z_d)`. The result is the zero polynomial, which is the
/// exact certificate that `Q_d` vanishes on the whole image set.
pub fn pullback_on_image(d: usize) -> Result<SparsePoly> {
    let q = cortex_poly(d)?;
    let tvars = 2 * d; // (a_1..a_d, z_1..z_d)
    let a_idx = |j: usize| j - 1;
    let z_idx = |i: usize| d + i - 1;

    let mut subs = vec![SparsePoly::zero(tvars); 4 * d];
    for j in 1..=d {
        let mut e = vec![0u16; tvars];
        e[a_idx(j)] = 1;
        e[z_idx(1)] = 1;
        subs[pos_y(d, 2 * j - 1)] = SparsePoly::monomial(tvars, e, rat(-1));
    }
    for j in 1..d {
        let mut e = vec![0u16; tvars];
        e[a_idx(j)] = 1;
        e[z_idx(j + 1)] = 1;
        subs[pos_y(d, 2 * j)] = SparsePoly::monomial(tvars, e, rat(-1));
    }
    let mut last = SparsePoly::zero(tvars);
    for m in 2..=d {
        let mut e = vec![0u16; tvars];
        e[a_idx(d)] = 1;
        e[z_idx(m)] = 1;
        last.add_term(e, rat(-1));
    }
    subs[pos_y(d, 2 * d)] = last;

    q.poly().compose(&subs)
}

/// Exact membership in the cortex variety of `g_d`:
/// all `z` coordinates vanish and `Q_d(y) = 0`; `x` is unconstrained.
pub fn cortex_membership_gd(d: usize, ell: &Covector) -> Result<bool> {
    Ok(cortex_membership_report(d, ell)?.member)
}

/// Membership verdict together with the exact residuals behind it.
#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub d: usize,
    pub member: bool,
    pub z_values: Vec<Rat>,
    pub q_value: Rat,
}

pub fn cortex_membership_report(d: usize, ell: &Covector) -> Result<MembershipReport> {
    if d < 2 {
        return Err(Error::FamilyIndexTooSmall(d));
    }
    if ell.dim() != 4 * d {
        return Err(Error::DimensionMismatch {
            expected: 4 * d,
            got: ell.dim(),
        });
    }
    let z_values: Vec<Rat> = (1..=d).map(|i| ell.coord(pos_z(d, i)).clone()).collect();
    let q_value = cortex_poly(d)?.eval(ell)?;
    let member = z_values.iter().all(Rat::is_zero) && q_value.is_zero();
    Ok(MembershipReport {
        d,
        member,
        z_values,
        q_value,
    })
}

/// One scale of a witness schedule: the sequence element `l(eps)`, the
/// direction `X(eps)`, the exact image `Ad*_{exp X(eps)} l(eps)`, and the
/// residual against the target (supported on the `z` block only).
#[derive(Clone, Debug)]
pub struct WitnessStep {
    pub epsilon: Rat,
    pub ell_eps: Covector,
    pub x_eps: Vec<Rat>,
    pub image: Covector,
    pub z_residual: Vec<Rat>,
}

impl WitnessStep {
    pub fn max_abs_z_residual(&self) -> Rat {
        self.z_residual
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// Closed-form sequences `(X(eps), l(eps))` realizing a cortex point as a
/// limit: `l(eps)` has `z_1 = eps`, `z_{j+1} = eps y_{2j}/y_{2j-1}` and no
/// other support, and `X(eps) = sum_j (-y_{2j-1}/eps) X_j + sum_k (x_k/eps)
/// Y_{2k-1}`. The image then matches the target exactly in every `y` and
/// `x` coordinate, with `z` residual linear in `eps`.
#[derive(Clone, Debug)]
pub struct WitnessSchedule {
    pub d: usize,
    pub target: Covector,
    pub steps: Vec<WitnessStep>,
}

pub fn witness_sequence(
    d: usize,
    target: &Covector,
    epsilons: &[Rat],
) -> Result<(WitnessSchedule, CortexReport)> {
    let membership = cortex_membership_report(d, target)?;
    if !membership.member {
        return Err(Error::NotCortexMember(format!(
            "z = ({}), Q_{d} = {}",
            crate::exactmath::format_rat_list(&membership.z_values),
            membership.q_value
        )));
    }
    for eps in epsilons {
        if !eps.is_positive() {
            return Err(Error::NonpositiveEpsilon(eps.to_string()));
        }
    }
    let zero_target = target.is_zero();
    if !zero_target {
        for j in 1..d {
            if target.coord(pos_y(d, 2 * j - 1)).is_zero() {
                return Err(Error::DegenerateStratum(2 * j - 1));
            }
        }
    }

    let g = make_gd(d)?;
    let n = 4 * d;
    let mut steps = Vec::with_capacity(epsilons.len());
    for eps in epsilons {
        let mut ell = vec![Rat::zero(); n];
        let mut x = vec![Rat::zero(); n];
        ell[pos_z(d, 1)] = eps.clone();
        if !zero_target {
            for j in 1..d {
                let y_odd = target.coord(pos_y(d, 2 * j - 1));
                let y_even = target.coord(pos_y(d, 2 * j));
                ell[pos_z(d, j + 1)] = eps * &(y_even / y_odd);
            }
            for j in 1..=d {
                x[pos_x(d, j)] = -(target.coord(pos_y(d, 2 * j - 1)) / eps);
            }
            for k in 1..=d {
                x[pos_y(d, 2 * k - 1)] = target.coord(pos_x(d, k)) / eps;
            }
        }
        let ell_eps = Covector::new(ell);
        let image = coadjoint_exp(g.algebra(), &x, &ell_eps)?;
        let z_residual: Vec<Rat> = (1..=d)
            .map(|i| image.coord(pos_z(d, i)) - target.coord(pos_z(d, i)))
            .collect();
        debug_assert!(
            image.coords()[d..] == target.coords()[d..],
            "image must equal the target outside the z block"
        );
        steps.push(WitnessStep {
            epsilon: eps.clone(),
            ell_eps,
            x_eps: x,
            image,
            z_residual,
        });
    }

    let exact_in_yx = steps
        .iter()
        .all(|s| s.image.coords()[d..] == target.coords()[d..]);
    let schedule = WitnessSchedule {
        d,
        target: target.clone(),
        steps,
    };
    let report = CortexReport {
        membership: Some(membership),
        witness: Some(WitnessSummary::from_schedule(&schedule, exact_in_yx)),
        classifier: None,
    };
    Ok((schedule, report))
}

/// True iff every generator takes the same value at `ell` as at 0.
pub fn icor_membership(gens: &InvariantGenerators, ell: &Covector) -> Result<bool> {
    for p in gens.generators() {
        if p.eval(ell.coords())? != p.constant_term() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The derivation of `p` along the coadjoint direction `U_b` (0-based
/// `b`): `D_b p = sum_k (dp/du_k) * (ad*_{U_b} l)_k`, a polynomial because
/// `ad*_{U_b} l` is linear in `l`. `p` is invariant iff this vanishes for
/// every `b`.
pub fn coadjoint_derivation(alg: &LieAlgebra, p: &SparsePoly, b: usize) -> Result<SparsePoly> {
    let n = alg.dim();
    if p.vars() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: p.vars(),
        });
    }
    if b >= n {
        return Err(Error::VariableOutOfRange { index: b, vars: n });
    }
    let mut out = SparsePoly::zero(n);
    for k in 0..n {
        let br = alg.bracket_basis(b, k);
        if br.is_empty() {
            continue;
        }
        let pk = p.partial(k)?;
        if pk.is_zero() {
            continue;
        }
        // (ad*_{U_b} l)_k = -l([U_b, U_k]) as a linear polynomial
        let mut lin = SparsePoly::zero(n);
        for (m, c) in br {
            let mut e = vec![0u16; n];
            e[m] = 1;
            lin.add_term(e, -c);
        }
        out = &out + &(&pk * &lin);
    }
    Ok(out)
}

/// Outcome of the codimension classifier.
#[derive(Clone, Debug)]
pub struct ClassifierReport {
    pub conclusive: bool,
    pub zperp_dim: usize,
    pub generic_orbit_dim: usize,
    pub codim: usize,
    pub trials: usize,
    pub orbit_dims_seen: BTreeSet<usize>,
}

impl ClassifierReport {
    pub fn verdict_line(&self) -> String {
        if self.conclusive {
            if self.zperp_dim == 0 {
                format!(
                    "Cor = z^⊥ = {{0}} (generic orbit codimension {} in z^⊥; sampled over {} covectors)",
                    self.codim, self.trials
                )
            } else {
                format!(
                    "Cor = z^⊥ (generic orbit codimension {} ≤ 1 in z^⊥; sampled over {} covectors)",
                    self.codim, self.trials
                )
            }
        } else {
            format!(
                "inconclusive: generic orbit codimension {} in z^⊥ exceeds 1; decide points with the membership and witness tools",
                self.codim
            )
        }
    }
}

/// Estimate the generic orbit dimension as the maximum of
/// `orbit_dimension` over seeded random covectors; when its codimension
/// inside the annihilator of the center is 0 or 1, the cortex is all of
/// that annihilator.
pub fn codim_classifier(alg: &LieAlgebra, trials: usize, seed: u64) -> Result<ClassifierReport> {
    require_two_step(alg)?;
    let n = alg.dim();
    let mut sampler = RationalSampler::new(seed);
    let mut dims = BTreeSet::new();
    let mut max_dim = 0usize;
    for _ in 0..trials {
        let ell = sampler.covector(n);
        let dim = orbit_dimension(alg, &ell)?;
        dims.insert(dim);
        max_dim = max_dim.max(dim);
    }
    let zperp_dim = n - alg.center().dim();
    let codim = zperp_dim.saturating_sub(max_dim);
    Ok(ClassifierReport {
        conclusive: codim <= 1,
        zperp_dim,
        generic_orbit_dim: max_dim,
        codim,
        trials,
        orbit_dims_seen: dims,
    })
}

fn require_two_step(alg: &LieAlgebra) -> Result<()> {
    let report = alg.validate();
    if !report.jacobi_ok {
        return Err(Error::InvalidAlgebra("Jacobi identity fails".to_string()));
    }
    if !report.two_step {
        return Err(Error::NotTwoStep(match report.nilpotency_class {
            Some(c) => format!("nilpotency class {c}"),
            None => "not nilpotent".to_string(),
        }));
    }
    Ok(())
}

/// Numeric (double-precision) sampler of the image set: draw `l` uniformly
/// at a scale from the schedule and `X` uniformly in a fixed ball, keep
/// images `ad*_X(l)` with max norm inside the window, normalized to unit
/// max norm. Deterministic given the seed: sample `i` uses the substream
/// `split_seed(seed, i)` and draws the `l` coordinates first, then `X`;
/// output is in sample-index order.
pub fn approximate_cortex(
    alg: &LieAlgebra,
    samples: usize,
    scale_schedule: &[f64],
    window: (f64, f64),
    seed: u64,
) -> Result<Vec<Vec<f64>>> {
    require_two_step(alg)?;
    let (lo, hi) = window;
    if samples == 0 || scale_schedule.is_empty() || lo > hi {
        return Ok(Vec::new());
    }
    type FloatBrackets = Vec<(usize, usize, Vec<(usize, f64)>)>;
    let n = alg.dim();
    let table: FloatBrackets = alg
        .bracket_entries()
        .map(|(i, j, coeffs)| {
            (
                i,
                j,
                coeffs
                    .iter()
                    .map(|(k, c)| (*k, crate::exactmath::rat_to_f64(c)))
                    .collect(),
            )
        })
        .collect();

    let mut cloud = Vec::new();
    for idx in 0..samples {
        let mut rng = SplitMix64::new(split_seed(seed, idx as u64));
        let delta = scale_schedule[idx % scale_schedule.len()];
        let ell: Vec<f64> = (0..n).map(|_| rng.uniform(-delta, delta)).collect();
        let x: Vec<f64> = (0..n)
            .map(|_| rng.uniform(-X_BALL_RADIUS, X_BALL_RADIUS))
            .collect();
        let mut img = vec![0.0f64; n];
        for (i, j, coeffs) in &table {
            let mut v = 0.0;
            for (k, c) in coeffs {
                v += ell[*k] * c;
            }
            if v == 0.0 {
                continue;
            }
            img[*j] -= x[*i] * v;
            img[*i] += x[*j] * v;
        }
        let norm = img.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if norm >= lo && norm <= hi {
            cloud.push(img.into_iter().map(|c| c / norm).collect());
        }
    }
    Ok(cloud)
}

/// Human- and machine-renderable container for the exact reports. Every
/// residual in here is an exact rational; floating data only ever comes
/// out of [`approximate_cortex`] and is kept apart.
#[derive(Clone, Debug, Default)]
pub struct CortexReport {
    pub membership: Option<MembershipReport>,
    pub witness: Option<WitnessSummary>,
    pub classifier: Option<ClassifierReport>,
}

#[derive(Clone, Debug)]
pub struct WitnessSummary {
    pub target: Covector,
    pub rows: Vec<WitnessRow>,
    pub exact_in_yx: bool,
}

#[derive(Clone, Debug)]
pub struct WitnessRow {
    pub epsilon: Rat,
    pub ell_eps: Covector,
    pub x_eps: Vec<Rat>,
    pub image: Covector,
    pub z_residual: Vec<Rat>,
}

impl WitnessSummary {
    fn from_schedule(schedule: &WitnessSchedule, exact_in_yx: bool) -> Self {
        Self {
            target: schedule.target.clone(),
            rows: schedule
                .steps
                .iter()
                .map(|s| WitnessRow {
                    epsilon: s.epsilon.clone(),
                    ell_eps: s.ell_eps.clone(),
                    x_eps: s.x_eps.clone(),
                    image: s.image.clone(),
                    z_residual: s.z_residual.clone(),
                })
                .collect(),
            exact_in_yx,
        }
    }
}

impl CortexReport {
    /// Machine-readable record: same data as the text rendering, with
    /// rationals as canonical strings.
    pub fn to_record(&self) -> serde_json::Value {
        let rats = |v: &[Rat]| -> Vec<String> { v.iter().map(|r| r.to_string()).collect() };
        let mut obj = serde_json::Map::new();
        if let Some(m) = &self.membership {
            obj.insert(
                "membership".into(),
                json!({
                    "d": m.d,
                    "member": m.member,
                    "z_values": rats(&m.z_values),
                    "q_value": m.q_value.to_string(),
                }),
            );
        }
        if let Some(w) = &self.witness {
            obj.insert(
                "witness".into(),
                json!({
                    "target": rats(w.target.coords()),
                    "exact_in_yx": w.exact_in_yx,
                    "steps": w.rows.iter().map(|r| json!({
                        "epsilon": r.epsilon.to_string(),
                        "ell": rats(r.ell_eps.coords()),
                        "x": rats(&r.x_eps),
                        "image": rats(r.image.coords()),
                        "z_residual": rats(&r.z_residual),
                    })).collect::<Vec<_>>(),
                }),
            );
        }
        if let Some(c) = &self.classifier {
            obj.insert(
                "classifier".into(),
                json!({
                    "conclusive": c.conclusive,
                    "zperp_dim": c.zperp_dim,
                    "generic_orbit_dim": c.generic_orbit_dim,
                    "codim": c.codim,
                    "trials": c.trials,
                    "orbit_dims_seen": c.orbit_dims_seen.iter().copied().collect::<Vec<_>>(),
                    "verdict": c.verdict_line(),
                }),
            );
        }
        serde_json::Value::Object(obj)
    }
}
