//! Evaluators for the probabilistic inequalities used on random `m`-subsets
//! of a finite ground set, and exhaustive oracles to check them against.
//!
//! Bound values are computed in a [`RealScalar`]; the oracles are exact
//! `BigRational`s and only converted at the comparison.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::density::two_density;
use crate::error::{Error, Result};
use crate::graph::{for_each_embedding, members, Graph};
use crate::scalar::{binomial, RealScalar};
use crate::BigRational;

/// Largest ground set the exact oracles enumerate.
pub const EXACT_LIMIT: usize = 20;

/// An indexed family of subsets of `{0, .., omega_size - 1}`; repeated sets
/// count as separate members.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetFamily {
    pub omega_size: usize,
    pub sets: Vec<u64>,
}

impl SubsetFamily {
    pub fn new(omega_size: usize, sets: Vec<u64>) -> Result<Self> {
        if omega_size > 64 {
            return Err(Error::param("omega_size", "at most 64"));
        }
        let universe = if omega_size == 64 {
            u64::MAX
        } else {
            (1u64 << omega_size) - 1
        };
        if let Some(s) = sets.iter().find(|&&s| s & !universe != 0) {
            return Err(Error::param(
                "sets",
                format!("{s:#b} leaves the ground set of size {omega_size}"),
            ));
        }
        Ok(SubsetFamily { omega_size, sets })
    }

    pub fn from_lists(omega_size: usize, lists: &[&[usize]]) -> Result<Self> {
        let mut sets = Vec::with_capacity(lists.len());
        for l in lists {
            let mut s = 0u64;
            for &x in *l {
                if x >= omega_size {
                    return Err(Error::param("sets", format!("element {x} outside ground set")));
                }
                s |= 1 << x;
            }
            sets.push(s);
        }
        Self::new(omega_size, sets)
    }

    fn check_m(&self, m: usize) -> Result<()> {
        if m > self.omega_size {
            return Err(Error::param("m", format!("m = {m} exceeds N = {}", self.omega_size)));
        }
        Ok(())
    }
}

fn p_of<F: RealScalar>(m: usize, n: usize) -> F {
    if n == 0 {
        F::zero()
    } else {
        F::of_usize(m) / F::of_usize(n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct JansonTerms<F> {
    pub mu: F,
    pub delta: F,
    pub q: F,
    pub bound: F,
    /// `mu / (mu + delta)` clamped to `[0, 1]`; 1 when both vanish.
    pub q_star: F,
}

/// Upper bound on the probability that a uniform `m`-subset contains no
/// member of the family. `delta` sums over ordered pairs.
pub fn janson_bound<F: RealScalar>(fam: &SubsetFamily, m: usize, q: F) -> Result<JansonTerms<F>> {
    fam.check_m(m)?;
    if !(q >= F::zero() && q <= F::one()) {
        return Err(Error::param("q", "need 0 <= q <= 1"));
    }
    let p: F = p_of(m, fam.omega_size);
    let pw = |s: u64| p.powi(s.count_ones() as i32);
    let mu = fam.sets.iter().fold(F::zero(), |acc, &s| acc + pw(s));
    let mut delta = F::zero();
    for (i, &a) in fam.sets.iter().enumerate() {
        for (j, &b) in fam.sets.iter().enumerate() {
            if i != j && a & b != 0 {
                delta = delta + pw(a | b);
            }
        }
    }
    let two = F::of(2.0);
    let bound = two * (-q * mu + q * q * delta / two).exp();
    let q_star = if (mu + delta).is_zero() {
        F::one()
    } else {
        (mu / (mu + delta)).max(F::zero()).min(F::one())
    };
    Ok(JansonTerms {
        mu,
        delta,
        q,
        bound,
        q_star,
    })
}

/// Sign of the error term in [`harris_bound`]. `Literal` subtracts
/// `exp(eta^2 m / 4)`, which makes the bound negative for every family;
/// `Corrected` subtracts `exp(-eta^2 m / 4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum HarrisMode {
    Literal,
    #[default]
    Corrected,
}

/// Lower bound on the probability that a uniform `m`-subset contains no
/// member of the family.
pub fn harris_bound<F: RealScalar>(fam: &SubsetFamily, m: usize, eta: F, mode: HarrisMode) -> Result<F> {
    fam.check_m(m)?;
    if !(eta > F::zero() && eta < F::one()) {
        return Err(Error::param("eta", "need 0 < eta < 1"));
    }
    if m > fam.omega_size / 2 {
        return Err(Error::param("m", "need m <= floor(N/2)"));
    }
    let p = (F::one() + eta) * p_of::<F>(m, fam.omega_size);
    let product = fam
        .sets
        .iter()
        .fold(F::one(), |acc, &s| acc * (F::one() - p.powi(s.count_ones() as i32)));
    let x = eta * eta * F::of_usize(m) / F::of(4.0);
    let err = match mode {
        HarrisMode::Literal => x.exp(),
        HarrisMode::Corrected => (-x).exp(),
    };
    Ok(product - err)
}

fn check_tail(n: usize, m: usize, k: usize) -> Result<()> {
    if m > n || k > n {
        return Err(Error::param("m/k", "need m <= N and k <= N"));
    }
    Ok(())
}

/// `exp(-t^2 / (2 k m / N))`, the bound on `P(|R ∩ A| <= km/N - t)` for a
/// uniform `m`-subset `R` and a fixed `k`-set `A`. With `km = 0` the event
/// has probability 1 at `t = 0` and 0 beyond, which is also the limit.
pub fn hypergeom_lower_tail<F: RealScalar>(n: usize, m: usize, k: usize, t: F) -> Result<F> {
    check_tail(n, m, k)?;
    if t.is_nan() || t < F::zero() {
        return Err(Error::param("t", "need t >= 0"));
    }
    if k * m == 0 {
        return Ok(if t.is_zero() { F::one() } else { F::zero() });
    }
    let mean = F::of_usize(k * m) / F::of_usize(n);
    Ok((-(t * t) / (F::of(2.0) * mean)).exp())
}

/// Exact `P(|R ∩ A| <= km/N - t)`.
pub fn exact_lower_tail(n: usize, m: usize, k: usize, t: &BigRational) -> Result<BigRational> {
    check_tail(n, m, k)?;
    if t < &BigRational::zero() {
        return Err(Error::param("t", "need t >= 0"));
    }
    let cut = BigRational::new(BigInt::from(k * m), BigInt::from(n.max(1))) - t;
    let total = BigInt::from(binomial(n as u64, m as u64));
    let mut hits = BigInt::zero();
    for x in 0..=k.min(m) {
        if BigRational::from_integer(BigInt::from(x)) > cut {
            break;
        }
        hits += BigInt::from(binomial(k as u64, x as u64) * binomial((n - k) as u64, (m - x) as u64));
    }
    Ok(BigRational::new(hits, total))
}

/// Successive `k`-subsets of `{0, .., n-1}` as bitmasks, in increasing order.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if k == 0 {
        Some(0)
    } else if k <= n {
        Some(if k == 64 { u64::MAX } else { (1u64 << k) - 1 })
    } else {
        None
    };
    std::iter::successors(first, move |&s| {
        if s == 0 {
            return None;
        }
        // Gosper's hack
        let c = s & s.wrapping_neg();
        let r = s.checked_add(c)?;
        let next = (((r ^ s) >> 2) / c) | r;
        (next <= limit && next.count_ones() == s.count_ones()).then_some(next)
    })
}

/// Exact probability that a uniform `m`-subset contains no member of the
/// family, by enumeration.
pub fn verify_bound_exact(fam: &SubsetFamily, m: usize) -> Result<BigRational> {
    if fam.omega_size > EXACT_LIMIT {
        return Err(Error::LimitExceeded {
            what: format!("ground set of size {}", fam.omega_size),
            limit: EXACT_LIMIT,
        });
    }
    fam.check_m(m)?;
    let mut good = 0u64;
    let mut total = 0u64;
    for r in k_subsets(fam.omega_size, m) {
        total += 1;
        good += u64::from(fam.sets.iter().all(|&b| b & !r != 0));
    }
    Ok(BigRational::new(good.into(), total.into()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TuranCheck {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    /// `e(K_r(n)) = C(r,2) n^2`.
    pub host_edges: u64,
    /// `e(K_r(n)) - n^2 / s^2`.
    #[serde(serialize_with = "rational_string")]
    pub bound: BigRational,
    pub bound_floor: i64,
    /// Exhaustive `ex(K_r(n), K_r(s))`, when `r n <= 12`.
    pub exhaustive_ex: Option<u64>,
}

impl TuranCheck {
    pub fn holds(&self) -> Option<bool> {
        self.exhaustive_ex.map(|ex| ex as i64 <= self.bound_floor)
    }

    pub fn tight(&self) -> Option<bool> {
        self.exhaustive_ex.map(|ex| ex as i64 == self.bound_floor)
    }
}

fn rational_string<S: serde::Serializer>(r: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

pub const TURAN_EXHAUSTIVE_LIMIT: usize = 12;

pub fn turan_partite_bound(n: usize, r: usize, s: usize) -> Result<TuranCheck> {
    if r < 2 {
        return Err(Error::param("r", "need r >= 2"));
    }
    if s == 0 || s > n {
        return Err(Error::param("s", "need 1 <= s <= n"));
    }
    let host_edges = (r * (r - 1) / 2 * n * n) as u64;
    let bound = BigRational::from_integer(BigInt::from(host_edges))
        - BigRational::new(BigInt::from(n * n), BigInt::from(s * s));
    let bound_floor = bound.floor().to_integer().to_i64().expect("small");
    let exhaustive_ex = (r * n <= TURAN_EXHAUSTIVE_LIMIT).then(|| {
        let host = Graph::complete_multipartite(&vec![n; r]);
        let pattern = Graph::complete_multipartite(&vec![s; r]);
        host_edges - min_hitting_set(&host, &pattern) as u64
    });
    Ok(TuranCheck {
        n,
        r,
        s,
        host_edges,
        bound,
        bound_floor,
        exhaustive_ex,
    })
}

/// Fewest host edges meeting every copy of `pattern`.
fn min_hitting_set(host: &Graph, pattern: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = host.edges().collect();
    assert!(edges.len() <= 128);
    let index = |u: usize, v: usize| {
        let key = (u.min(v), u.max(v));
        edges.iter().position(|&e| e == key).expect("host edge")
    };
    let mut copies = HashSet::new();
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let _ = for_each_embedding(host, pattern, |img| {
        let mask = pattern_edges
            .iter()
            .fold(0u128, |acc, &(a, b)| acc | 1u128 << index(img[a], img[b]));
        copies.insert(mask);
        std::ops::ControlFlow::Continue(())
    });
    let mut copies: Vec<u128> = copies.into_iter().collect();
    copies.sort_unstable();
    let mut best = edges.len();
    hitting_search(&copies, 0, 0, 0, &mut best);
    best
}

fn hitting_search(copies: &[u128], chosen: u128, banned: u128, size: usize, best: &mut usize) {
    let unhit: Vec<u128> = copies.iter().copied().filter(|c| c & chosen == 0).collect();
    let Some(&target) = unhit.iter().min_by_key(|c| (*c & !banned).count_ones()) else {
        *best = (*best).min(size);
        return;
    };
    // disjoint unhit copies each need their own edge
    let mut packed = 0u128;
    let mut lower = 0;
    for c in &unhit {
        let free = c & !banned;
        if free & packed == 0 {
            packed |= free;
            lower += 1;
        }
    }
    if size + lower >= *best {
        return;
    }
    let mut options = target & !banned;
    let mut banned = banned;
    while options != 0 {
        let e = options.trailing_zeros();
        options &= options - 1;
        hitting_search(copies, chosen | 1 << e, banned, size + 1, best);
        banned |= 1 << e;
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityRow {
    pub vertices: usize,
    pub edges: usize,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityCheck {
    pub rows: Vec<DensityRow>,
    pub all_hold: bool,
}

/// Checks `n^{v_F} p^{e_F} >= C^{e_F - 1} n^2 p` for every subgraph `F` of
/// `H` with at least one edge, given `p >= C n^{-1/m2(H)}`. Only the pair
/// `(v_F, e_F)` matters, so one row is reported per attainable pair.
pub fn density_inequality_check<F: RealScalar>(h: &Graph, c: F, p: F, n: u64) -> Result<DensityCheck> {
    let m2 = two_density::<Ratio<i64>>(h)?.value;
    let (c, p) = (
        c.to_f64().ok_or_else(|| Error::param("C", "not finite"))?,
        p.to_f64().ok_or_else(|| Error::param("p", "not finite"))?,
    );
    if c.is_nan() || c < 0.0 {
        return Err(Error::param("C", "need C >= 0"));
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(Error::param("p", "need 0 < p <= 1"));
    }
    if n < 2 {
        return Err(Error::param("n", "need n >= 2"));
    }
    let ln_n = (n as f64).ln();
    let floor = c * (-ln_n * (*m2.denom() as f64) / (*m2.numer() as f64)).exp();
    if p < floor * (1.0 - 1e-12) {
        return Err(Error::Precondition(format!("p = {p} is below C n^(-1/m2) = {floor}")));
    }
    let mut pairs = BTreeSet::new();
    for w in 1u64..(1 << h.n()) {
        let e_max = h.edges_within(w);
        for e in 1..=e_max {
            pairs.insert((w.count_ones() as usize, e));
        }
    }
    let ln_p = p.ln();
    let rows: Vec<DensityRow> = pairs
        .into_iter()
        .map(|(v, e)| {
            let lhs = v as f64 * ln_n + e as f64 * ln_p;
            let c_term = if e == 1 { 0.0 } else { (e - 1) as f64 * c.ln() };
            let rhs = c_term + 2.0 * ln_n + ln_p;
            DensityRow {
                vertices: v,
                edges: e,
                lhs_log: lhs,
                rhs_log: rhs,
                holds: rhs == f64::NEG_INFINITY || lhs >= rhs - 1e-9 * rhs.abs().max(1.0),
            }
        })
        .collect();
    Ok(DensityCheck {
        all_hold: rows.iter().all(|r| r.holds),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DsetsProbe {
    /// Fraction of `(W_1, .., W_z)` with more than `lambda d^z` cells of `M`.
    pub fraction: f64,
    pub exact: bool,
    pub tuples_examined: u64,
    pub alpha_pow_d: f64,
    /// `|M| / prod |U_i|`.
    pub density: f64,
}

pub const DSETS_EXACT_LIMIT: f64 = 1e6;

/// Share of `d`-subset tuples `W_i ⊆ U_i` that catch more than
/// `lambda d^z` cells of `M ⊆ U_1 × .. × U_z`; exact when there are at most
/// [`DSETS_EXACT_LIMIT`] tuples, otherwise `trials` seeded random tuples.
pub fn dsets_probe(
    u_sizes: &[usize],
    cells: &[Vec<usize>],
    d: usize,
    alpha: f64,
    lambda: f64,
    trials: u64,
    seed: u64,
) -> Result<DsetsProbe> {
    let z = u_sizes.len();
    if z == 0 {
        return Err(Error::param("u_sizes", "need at least one part"));
    }
    if d < 2 || u_sizes.iter().any(|&u| u < d || u > 64) {
        return Err(Error::param("d", "need 2 <= d <= min |U_i| and |U_i| <= 64"));
    }
    if !(alpha > 0.0 && lambda > 0.0) {
        return Err(Error::param("alpha/lambda", "need positive values"));
    }
    for cell in cells {
        if cell.len() != z || cell.iter().zip(u_sizes).any(|(&x, &u)| x >= u) {
            return Err(Error::param("cells", format!("{cell:?} is not in the product")));
        }
    }
    let cut = lambda * (d as f64).powi(z as i32);
    let caught = |ws: &[u64]| {
        cells
            .iter()
            .filter(|c| c.iter().zip(ws).all(|(&x, w)| w >> x & 1 == 1))
            .count()
    };
    let tuples: f64 = u_sizes
        .iter()
        .map(|&u| binomial(u as u64, d as u64).to_f64().unwrap_or(f64::INFINITY))
        .product();
    let (hits, examined, exact) = if tuples <= DSETS_EXACT_LIMIT {
        let choices: Vec<Vec<u64>> = u_sizes.iter().map(|&u| k_subsets(u, d).collect()).collect();
        let mut idx = vec![0usize; z];
        let mut ws = vec![0u64; z];
        let (mut hits, mut seen) = (0u64, 0u64);
        'outer: loop {
            for i in 0..z {
                ws[i] = choices[i][idx[i]];
            }
            seen += 1;
            hits += u64::from(caught(&ws) as f64 > cut);
            for i in (0..z).rev() {
                idx[i] += 1;
                if idx[i] < choices[i].len() {
                    continue 'outer;
                }
                idx[i] = 0;
            }
            break;
        }
        (hits, seen, true)
    } else {
        if trials == 0 {
            return Err(Error::param("trials", "need trials >= 1 above the exact limit"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hits = 0;
        for _ in 0..trials {
            let ws: Vec<u64> = u_sizes
                .iter()
                .map(|&u| index::sample(&mut rng, u, d).iter().fold(0u64, |w, x| w | 1 << x))
                .collect();
            hits += u64::from(caught(&ws) as f64 > cut);
        }
        (hits, trials, false)
    };
    Ok(DsetsProbe {
        fraction: hits as f64 / examined as f64,
        exact,
        tuples_examined: examined,
        alpha_pow_d: alpha.powi(d as i32),
        density: cells.len() as f64 / u_sizes.iter().map(|&u| u as f64).product::<f64>(),
    })
}

/// One comparison between a bound and the quantity it bounds.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub lemma: &'static str,
    pub instance: String,
    pub bound: f64,
    pub exact_or_estimate: f64,
    pub holds: bool,
}

const SLACK: f64 = 1e-12;

/// Seeded random family on `{0, .., N-1}` with `1 <= N <= max_n`.
pub fn random_family<R: Rng>(rng: &mut R, max_n: usize) -> SubsetFamily {
    let n = rng.random_range(1..=max_n);
    let count = rng.random_range(0..=6);
    let sets = (0..count)
        .map(|_| {
            let size = rng.random_range(1..=n.min(4));
            index::sample(rng, n, size).iter().fold(0u64, |s, x| s | 1 << x)
        })
        .collect();
    SubsetFamily::new(n, sets).expect("sets inside ground set")
}

fn describe(fam: &SubsetFamily) -> String {
    let mut s = format!("N={} sets=[", fam.omega_size);
    for (i, &b) in fam.sets.iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        let items: Vec<String> = members(b).map(|x| x.to_string()).collect();
        let _ = write!(s, "{{{}}}", items.join(","));
    }
    s.push(']');
    s
}

/// Janson (at `q*` and 10 random `q`) and corrected Harris (at
/// `eta = 0.1, .., 0.9`) against the exact probability, for every `m`.
pub fn check_family<R: Rng>(fam: &SubsetFamily, rng: &mut R) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    let label = describe(fam);
    for m in 0..=fam.omega_size {
        let exact = verify_bound_exact(fam, m)?.to_f64().expect("probability");
        let q_star = janson_bound::<f64>(fam, m, 1.0)?.q_star;
        let qs = std::iter::once(q_star).chain((0..10).map(|_| rng.random::<f64>()));
        for q in qs {
            let t = janson_bound(fam, m, q)?;
            out.push(VerificationRecord {
                lemma: "janson",
                instance: format!("{label} m={m} q={q:.6}"),
                bound: t.bound,
                exact_or_estimate: exact,
                holds: exact <= t.bound + SLACK,
            });
        }
        if m <= fam.omega_size / 2 {
            for i in 1..=9 {
                let eta = i as f64 / 10.0;
                let b = harris_bound(fam, m, eta, HarrisMode::Corrected)?;
                out.push(VerificationRecord {
                    lemma: "harris",
                    instance: format!("{label} m={m} eta={eta:.1}"),
                    bound: b,
                    exact_or_estimate: exact,
                    holds: b <= exact + SLACK,
                });
            }
        }
    }
    Ok(out)
}

/// The lower-tail bound against exact tails for every `(N, m, k)` with
/// `N <= max_n` and `t` on a half-integer grid up to `km/N`.
pub fn check_lower_tails(max_n: usize) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 0..=n {
            for k in 0..=n {
                let mean = BigRational::new(BigInt::from(k * m), BigInt::from(n));
                let mut t = BigRational::zero();
                let half = BigRational::new(1.into(), 2.into());
                while t <= mean {
                    let exact = exact_lower_tail(n, m, k, &t)?.to_f64().expect("probability");
                    let tf = t.to_f64().expect("small");
                    let bound: f64 = hypergeom_lower_tail(n, m, k, tf)?;
                    out.push(VerificationRecord {
                        lemma: "hypergeometric-lower-tail",
                        instance: format!("N={n} m={m} k={k} t={t}"),
                        bound,
                        exact_or_estimate: exact,
                        holds: exact <= bound + SLACK,
                    });
                    t += &half;
                }
            }
        }
    }
    Ok(out)
}

/// Partite Turán bound against exhaustive `ex` for `r` in `{2, 3}`,
/// `n <= max_n`, `s <= n`.
pub fn check_turan(max_n: usize) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for r in 2..=3 {
        for n in 1..=max_n {
            for s in 1..=n {
                let t = turan_partite_bound(n, r, s)?;
                let ex = t.exhaustive_ex.expect("within exhaustive limit");
                out.push(VerificationRecord {
                    lemma: "turan-partite",
                    instance: format!("r={r} n={n} s={s}"),
                    bound: t.bound.to_f64().expect("small"),
                    exact_or_estimate: ex as f64,
                    holds: t.holds() == Some(true),
                });
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub families: usize,
    pub checked: usize,
    pub violations: Vec<VerificationRecord>,
    pub per_lemma: Vec<(&'static str, usize, usize)>,
}

impl SuiteReport {
    pub fn all_hold(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Seeded corpus run: `families` random families with `N <= 12`, all lower
/// tails with `N <= 12`, and the Turán cases with `n <= 3`.
pub fn inequality_suite(seed: u64, families: usize) -> Result<SuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    for _ in 0..families {
        let fam = random_family(&mut rng, 12);
        records.extend(check_family(&fam, &mut rng)?);
    }
    records.extend(check_lower_tails(12)?);
    records.extend(check_turan(3)?);
    let per_lemma = ["janson", "harris", "hypergeometric-lower-tail", "turan-partite"]
        .into_iter()
        .map(|l| {
            let of: Vec<_> = records.iter().filter(|r| r.lemma == l).collect();
            (l, of.len(), of.iter().filter(|r| !r.holds).count())
        })
        .collect();
    Ok(SuiteReport {
        seed,
        families,
        checked: records.len(),
        violations: records.into_iter().filter(|r| !r.holds).collect(),
        per_lemma,
    })
}
