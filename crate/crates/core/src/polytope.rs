//! Exact checks that a scaled fractional connectivity point lies in the
//! integral l-edge-cover polytope.
//!
//! The integral polytope is described by the box, the degree constraints
//! `x(delta(v)) >= l` and, for every `S` and `F` within `delta(S)` with
//! `l|S| - |F|` odd and positive, `x(zeta(S) \ F) >= (l|S| - |F| + 1) / 2`.
//! Membership is decided by enumerating these constraints.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::connectivity::{fractional_edge_connectivity, FractionalCut};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, MultiGraph, NodeSet};
use crate::rational::{int, is_unit_interval, sum, to_common_denominator, Rational};

/// A point of `[0, 1]^E`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracVector(Vec<Rational>);

impl FracVector {
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if let Some(i) = values.iter().position(|v| !is_unit_interval(v)) {
            return Err(Error::BoxViolation { edge: i, value: values[i] });
        }
        Ok(FracVector(values))
    }

    pub fn ones(m: usize) -> Self {
        FracVector(vec![Rational::one(); m])
    }

    pub fn uniform(m: usize, value: Rational) -> Result<Self> {
        Self::new(vec![value; m])
    }

    pub fn for_graph(g: &MultiGraph, values: Vec<Rational>) -> Result<Self> {
        if values.len() != g.m() {
            return Err(Error::LengthMismatch {
                expected: g.m(),
                found: values.len(),
            });
        }
        Self::new(values)
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> Rational {
        sum(&self.0)
    }

    pub fn scaled(&self, factor: Rational) -> Result<Self> {
        Self::new(self.0.iter().map(|v| v * factor).collect())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ScaleCase {
    EvenOrLarge,
    OddSmall,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ScaleFactor {
    pub mu: Rational,
    pub case: ScaleCase,
}

fn check_levels(k: usize, l: usize) -> Result<()> {
    if l == 0 || l >= k {
        return Err(Error::Parameter(format!("need 1 <= l <= k - 1, got k = {k}, l = {l}")));
    }
    Ok(())
}

/// `l/k` when `ln` is even or `x(E) >= kn/2 + k/(2l)`, otherwise
/// `(ln + 1) / (2 x(E))`.
pub fn scale_factor(n: usize, k: usize, l: usize, total: Rational) -> Result<ScaleFactor> {
    check_levels(k, l)?;
    let (nq, kq, lq) = (int(n as i128), int(k as i128), int(l as i128));
    let two = int(2);
    if total < kq * nq / two {
        return Err(Error::Parameter(format!("x(E) = {total} is below kn/2")));
    }
    if (l * n) % 2 == 0 || total >= kq * nq / two + kq / (two * lq) {
        Ok(ScaleFactor {
            mu: lq / kq,
            case: ScaleCase::EvenOrLarge,
        })
    } else {
        Ok(ScaleFactor {
            mu: (lq * nq + Rational::one()) / (two * total),
            case: ScaleCase::OddSmall,
        })
    }
}

/// `l/k + 1/(kn)`, the factor that works in every case.
pub fn relaxed_scale_factor(n: usize, k: usize, l: usize) -> Rational {
    Rational::new(l as i128, k as i128) + Rational::new(1, (k * n) as i128)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FracConVerdict {
    pub ok: bool,
    pub cut: FractionalCut,
}

/// Whether every cut of `g` carries at least `k` under `x`; `cut` is a
/// minimizing one.
pub fn in_frac_con(g: &MultiGraph, x: &FracVector, k: usize) -> Result<FracConVerdict> {
    let cut = fractional_edge_connectivity(g, x.as_slice())?;
    Ok(FracConVerdict {
        ok: cut.value >= int(k as i128),
        cut,
    })
}

/// How the subsets `F` of `delta(S)` are covered.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum FamilyMode {
    /// For each size `|F| = f` only the `f` heaviest edges of `delta(S)`
    /// (ties by id): they minimize the left side among all `F` of that size,
    /// so the verdict equals that of full enumeration.
    Dominant,
    /// Every subset of `delta(S)`.
    Exhaustive,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub mode: FamilyMode,
    pub max_nodes: usize,
    /// Largest `|delta(S)|` allowed in exhaustive mode.
    pub max_cut_edges: usize,
    /// Tight constraints beyond this many are counted but not stored.
    pub max_tight: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            mode: FamilyMode::Dominant,
            max_nodes: 10,
            max_cut_edges: 16,
            max_tight: 64,
        }
    }
}

impl EnumerationOptions {
    pub fn exhaustive() -> Self {
        EnumerationOptions {
            mode: FamilyMode::Exhaustive,
            ..Self::default()
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ConstraintFamily {
    Degree,
    OddSet,
}

/// One constraint `lhs >= rhs`, with `S` and `F` (`F` empty for degree rows).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Constraint {
    pub family: ConstraintFamily,
    pub side: NodeSet,
    pub removed: EdgeSet,
    pub lhs: Rational,
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub ok: bool,
    /// First violated constraint in enumeration order (increasing `S` mask).
    pub violation: Option<Constraint>,
    pub tight: Vec<Constraint>,
    pub tight_count: usize,
    pub constraints_checked: u64,
}

/// Integer view of `x` and of the edges, shared by the enumerations.
struct Scaled {
    n: usize,
    ends: Vec<(u32, u32)>,
    w: Vec<i128>,
    den: i128,
}

impl Scaled {
    fn new(g: &MultiGraph, x: &FracVector, opts: &EnumerationOptions) -> Result<Scaled> {
        g.require_undirected()?;
        if x.len() != g.m() {
            return Err(Error::LengthMismatch {
                expected: g.m(),
                found: x.len(),
            });
        }
        if g.n() > opts.max_nodes.min(31) {
            return Err(Error::TooLarge {
                what: "node subset enumeration",
                size: g.n(),
                cap: opts.max_nodes.min(31),
            });
        }
        let (w, den) = to_common_denominator(x.as_slice());
        let ends = g.edge_list().iter().map(|&(u, v)| (1u32 << u, 1u32 << v)).collect();
        Ok(Scaled { n: g.n(), ends, w, den })
    }

    /// `(2 x(zeta(S)), delta(S) edge ids)` for the subset `s`.
    fn split(&self, s: u32) -> (i128, Vec<usize>) {
        let mut zeta2 = 0;
        let mut cut = Vec::new();
        for (i, &(bu, bv)) in self.ends.iter().enumerate() {
            let (a, b) = (s & bu != 0, s & bv != 0);
            if a || b {
                zeta2 += 2 * self.w[i];
            }
            if a != b {
                cut.push(i);
            }
        }
        (zeta2, cut)
    }

    fn q(&self, v: i128) -> Rational {
        Rational::new(v, self.den)
    }
}

/// Calls `visit(f_ids, x(F) numerator)` on the subsets of `cut` the mode
/// requires.
fn for_each_removed<V>(sc: &Scaled, cut: &[usize], opts: &EnumerationOptions, mut visit: V) -> Result<()>
where
    V: FnMut(&dyn Fn() -> Vec<usize>, usize, i128) -> bool,
{
    match opts.mode {
        FamilyMode::Dominant => {
            let mut order = cut.to_vec();
            order.sort_by(|&a, &b| sc.w[b].cmp(&sc.w[a]).then(a.cmp(&b)));
            let mut xf = 0;
            for f in 0..=order.len() {
                if f > 0 {
                    xf += sc.w[order[f - 1]];
                }
                let ids = || order[..f].to_vec();
                if !visit(&ids, f, xf) {
                    return Ok(());
                }
            }
        }
        FamilyMode::Exhaustive => {
            let t = cut.len();
            if t > opts.max_cut_edges.min(30) {
                return Err(Error::TooLarge {
                    what: "cut subset enumeration",
                    size: t,
                    cap: opts.max_cut_edges.min(30),
                });
            }
            // Gray code walk: one edge flips per step
            let mut mask = 0u32;
            let mut xf = 0;
            for step in 0u32..1 << t {
                if step > 0 {
                    let bit = step.trailing_zeros();
                    mask ^= 1 << bit;
                    let e = cut[bit as usize];
                    if mask >> bit & 1 == 1 {
                        xf += sc.w[e];
                    } else {
                        xf -= sc.w[e];
                    }
                }
                let m = mask;
                let ids = || (0..t).filter(|&i| m >> i & 1 == 1).map(|i| cut[i]).collect();
                if !visit(&ids, mask.count_ones() as usize, xf) {
                    return Ok(());
                }
            }
        }
    }
    Ok(())
}

struct Recorder<'a> {
    opts: &'a EnumerationOptions,
    verdict: MembershipVerdict,
}

impl Recorder<'_> {
    fn record(&mut self, lhs: i128, rhs: i128, make: impl FnOnce() -> Constraint) -> bool {
        self.verdict.constraints_checked += 1;
        if lhs < rhs {
            self.verdict.ok = false;
            self.verdict.violation = Some(make());
            return false;
        }
        if lhs == rhs {
            self.verdict.tight_count += 1;
            if self.verdict.tight.len() < self.opts.max_tight {
                self.verdict.tight.push(make());
            }
        }
        true
    }
}

/// Decides membership of `x` in the integral l-edge-cover polytope of the
/// undirected `g` by enumerating its constraints.
pub fn in_integral_cover_polytope(
    g: &MultiGraph,
    x: &FracVector,
    l: usize,
    opts: &EnumerationOptions,
) -> Result<MembershipVerdict> {
    let sc = Scaled::new(g, x, opts)?;
    let m = g.m();
    let mut rec = Recorder {
        opts,
        verdict: MembershipVerdict {
            ok: true,
            violation: None,
            tight: Vec::new(),
            tight_count: 0,
            constraints_checked: 0,
        },
    };
    let lq = l as i128;
    for v in 0..sc.n {
        let load: i128 = g.incident(v).iter().map(|&e| sc.w[e]).sum();
        let make = || Constraint {
            family: ConstraintFamily::Degree,
            side: NodeSet::from_nodes(sc.n, [v]),
            removed: EdgeSet::empty(m),
            lhs: sc.q(load),
            rhs: int(lq),
        };
        if !rec.record(load, lq * sc.den, make) {
            return Ok(rec.verdict);
        }
    }
    let mut stop = false;
    for s in 1u32..1 << sc.n {
        let size = s.count_ones() as i128;
        let (zeta2, cut) = sc.split(s);
        for_each_removed(&sc, &cut, opts, |ids, f, xf| {
            let excess = lq * size - f as i128;
            if excess < 1 || excess % 2 == 0 {
                return true;
            }
            // 2 x(zeta(S) \ F) >= l|S| - |F| + 1
            let lhs = zeta2 - 2 * xf;
            let rhs = (excess + 1) * sc.den;
            let keep = rec.record(lhs, rhs, || Constraint {
                family: ConstraintFamily::OddSet,
                side: NodeSet::Mask(s as u64),
                removed: EdgeSet::from_ids(m, ids()),
                lhs: Rational::new(lhs, 2 * sc.den),
                rhs: Rational::new(excess + 1, 2),
            });
            stop = !keep;
            keep
        })?;
        if stop {
            break;
        }
    }
    Ok(rec.verdict)
}

/// Spot check of the inequality the scaling argument reduces to: for every
/// nonempty proper `S` and `F` within `delta(S)`,
/// `x(delta(S)) - x(F) + ((k - l)/l) |F| >= k/l`. Returns the first failure.
pub fn check_reduced_inequality(
    g: &MultiGraph,
    x: &FracVector,
    k: usize,
    l: usize,
    opts: &EnumerationOptions,
) -> Result<Option<Constraint>> {
    check_levels(k, l)?;
    let sc = Scaled::new(g, x, opts)?;
    let (kq, lq) = (k as i128, l as i128);
    let full = (1u32 << sc.n) - 1;
    let mut failure = None;
    for s in 1u32..full {
        let (_, cut) = sc.split(s);
        let xd: i128 = cut.iter().map(|&e| sc.w[e]).sum();
        for_each_removed(&sc, &cut, opts, |ids, f, xf| {
            // times l * den: l (x(d) - x(F)) + (k - l) f den >= k den
            let lhs = lq * (xd - xf) + (kq - lq) * f as i128 * sc.den;
            let rhs = kq * sc.den;
            if lhs < rhs {
                failure = Some(Constraint {
                    family: ConstraintFamily::OddSet,
                    side: NodeSet::Mask(s as u64),
                    removed: EdgeSet::from_ids(g.m(), ids()),
                    lhs: Rational::new(lhs, lq * sc.den),
                    rhs: Rational::new(kq, lq),
                });
            }
            failure.is_none()
        })?;
        if failure.is_some() {
            break;
        }
    }
    Ok(failure)
}

/// Checks `2 x(zeta(S)) = sum_{v in S} x(delta(v)) + x(delta(S))` for every
/// nonempty `S`, and `x(zeta(S)) >= k|S|/2 + x(delta(S))/2` when every node
/// has load at least `k`. Returns the first `S` where either fails.
pub fn check_zeta_decomposition(g: &MultiGraph, x: &FracVector, k: usize) -> Result<Option<NodeSet>> {
    let opts = EnumerationOptions {
        max_nodes: 20,
        ..EnumerationOptions::default()
    };
    let sc = Scaled::new(g, x, &opts)?;
    let load: Vec<i128> = (0..sc.n).map(|v| g.incident(v).iter().map(|&e| sc.w[e]).sum()).collect();
    let degree_ok = load.iter().all(|&d| d >= k as i128 * sc.den);
    for s in 1u32..1 << sc.n {
        let (zeta2, cut) = sc.split(s);
        let xd: i128 = cut.iter().map(|&e| sc.w[e]).sum();
        let loads: i128 = (0..sc.n).filter(|&v| s >> v & 1 == 1).map(|v| load[v]).sum();
        let bound = k as i128 * s.count_ones() as i128 * sc.den + xd;
        if zeta2 != loads + xd || (degree_ok && zeta2 < bound) {
            return Ok(Some(NodeSet::Mask(s as u64)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalingReport {
    pub scale: ScaleFactor,
    pub relaxed_factor: Rational,
    pub scaled: MembershipVerdict,
    pub relaxed: MembershipVerdict,
    /// `(ln + 1) / (2 x(E)) <= l/k + 1/(kn)`.
    pub factor_comparison_ok: bool,
}

impl ScalingReport {
    pub fn ok(&self) -> bool {
        self.scaled.ok && self.relaxed.ok && self.factor_comparison_ok
    }
}

/// For `x` in the fractional k-edge-connectivity polytope, checks that
/// `mu x` and `(l/k + 1/(kn)) x` lie in the integral l-edge-cover polytope.
pub fn verify_scaling(
    g: &MultiGraph,
    x: &FracVector,
    k: usize,
    l: usize,
    opts: &EnumerationOptions,
) -> Result<ScalingReport> {
    check_levels(k, l)?;
    let con = in_frac_con(g, x, k)?;
    if !con.ok {
        return Err(Error::NotInConnectivityPolytope {
            k,
            value: con.cut.value,
            side: con.cut.side.nodes(),
        });
    }
    let n = g.n();
    let total = x.total();
    let scale = scale_factor(n, k, l, total)?;
    let relaxed_factor = relaxed_scale_factor(n, k, l);
    let odd_small = Rational::new((l * n + 1) as i128, 2) / total;
    Ok(ScalingReport {
        scaled: in_integral_cover_polytope(g, &x.scaled(scale.mu)?, l, opts)?,
        relaxed: in_integral_cover_polytope(g, &x.scaled(relaxed_factor)?, l, opts)?,
        factor_comparison_ok: odd_small <= relaxed_factor,
        scale,
        relaxed_factor,
    })
}

/// Starts from all ones and lowers edges in a seeded random order by random
/// multiples of 1/64, keeping every cut at least `k`.
pub fn perturbed_feasible_point(g: &MultiGraph, k: usize, seed: u64) -> Result<FracVector> {
    let mut x = vec![Rational::one(); g.m()];
    let kq = int(k as i128);
    if fractional_edge_connectivity(g, &x)?.value < kq {
        return Err(Error::NotKEdgeConnected {
            k,
            found: fractional_edge_connectivity(g, &x)?.value.to_integer() as usize,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..g.m()).collect();
    order.shuffle(&mut rng);
    for e in order {
        let cut = Rational::new(rng.gen_range(1..=48), 64);
        let old = x[e];
        x[e] = (old - cut).max(Rational::zero());
        if fractional_edge_connectivity(g, &x)?.value < kq {
            x[e] = old;
        }
    }
    FracVector::new(x)
}
