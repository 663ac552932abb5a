//! From the predecessor automaton to the growth series and its analysis.
//!
//! The counts `c_j(k)` of normal words ending in syllable `j` satisfy, at the
//! level of generating functions, `f_j = t^(l_j) · (1 + Σ_(j' pred of j) f_(j'))`.
//! The half twist may follow every syllable, so its equation is kept aside
//! and the remaining ones form a square linear system over rational
//! functions; solving it and assembling `f = (1 + Σ_j f_j) / (1 − t^l)`
//! yields the growth series as an exact rational function.
//!
//! The analysis half of the module locates the real roots of the denominator
//! (Sturm sequences plus exact bisection), derives the growth rate from the
//! smallest positive one, computes partial-fraction residues when all poles
//! are real and simple, and examines cubic denominators through their
//! depressed form and the trigonometric root formula.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};

use crate::automaton::epsilon_matrix;
use crate::error::Error;
use crate::linsys::{solve_linear_system, LinearSystem};
use crate::poly::Polynomial;
use crate::ratfunc::{recurrence_from, series_expand, RationalFunction, Recurrence};
use crate::words::PresentationKind;
use crate::Result;

/// Default width to which real roots are narrowed (exact bisection, so this
/// is a certificate, not a hope).
pub const DEFAULT_ROOT_TOL: f64 = 1e-12;

/// The growth series of one monoid, with the per-syllable pieces it was
/// assembled from (`per_syllable[j]` counts normal words ending in `j`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratingFunction {
    pub n: usize,
    pub kind: PresentationKind,
    pub rf: RationalFunction,
    pub per_syllable: BTreeMap<usize, RationalFunction>,
}

/// Everything the root/asymptotics analysis produces for one series.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthReport {
    pub denominator: Polynomial,
    /// Real roots of the denominator, ascending, with multiplicities.
    pub real_roots: Vec<(f64, usize)>,
    /// `(pole r_j, coefficient a_j)` of the `Σ a_j/(r_j − t)` expansion;
    /// present only when every denominator root is real and simple.
    pub residues: Option<Vec<(f64, f64)>>,
    pub growth_rate: f64,
    pub recurrence: Recurrence,
}

/// Exact data of a cubic after the Tschirnhaus shift `t = y + shift`:
/// `y³ + p·y + q`, its discriminant expression, and the real roots the
/// trigonometric formula produces (in the original variable).
#[derive(Debug, Clone, PartialEq)]
pub struct CubicAnalysis {
    pub p: BigRational,
    pub q: BigRational,
    pub shift: BigRational,
    /// `q²/4 + p³/27`; negative exactly when there are three distinct real roots.
    pub discriminant_expr: BigRational,
    pub root_count: usize,
    /// Ascending, nonempty only in the three-real-roots case.
    pub trig_roots: Vec<f64>,
}

/// The linear system for the `f_j` with the half-twist column removed, each
/// row multiplied by `t^(l_i)` so all entries are polynomials:
/// `t^(l_i)·Σ ε_(i,j) f_j − f_i = −t^(l_i)`.
pub fn build_system(n: usize, kind: PresentationKind) -> Result<LinearSystem> {
    let eps = epsilon_matrix(n, kind)?;
    let half_twist = factorial(n);
    let keep: Vec<usize> = (0..eps.labels.len())
        .filter(|&i| eps.labels[i] != half_twist)
        .collect();

    let a: Vec<Vec<RationalFunction>> = keep
        .iter()
        .map(|&i| {
            let tl = Polynomial::monomial(BigRational::one(), eps.lengths[i]);
            keep.iter()
                .map(|&j| {
                    let mut entry = if eps.entries[i][j] { tl.clone() } else { Polynomial::zero() };
                    if i == j {
                        entry = &entry - &Polynomial::one();
                    }
                    RationalFunction::from_polynomial(entry)
                })
                .collect()
        })
        .collect();
    let rhs: Vec<RationalFunction> = keep
        .iter()
        .map(|&i| {
            RationalFunction::from_polynomial(-&Polynomial::monomial(
                BigRational::one(),
                eps.lengths[i],
            ))
        })
        .collect();
    let labels = keep.iter().map(|&i| eps.labels[i]).collect();
    Ok(LinearSystem { a, rhs, labels })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Solve the system, recover the half-twist series, and assemble the growth
/// series `f = (1 + Σ_(j≠Δ) f_j) / (1 − t^l)` with `l = n(n−1)/2`.
pub fn generating_function(n: usize, kind: PresentationKind) -> Result<GeneratingFunction> {
    let sys = build_system(n, kind)?;
    let sol = solve_linear_system(&sys)?;

    let one = RationalFunction::one();
    let mut partial_sum = RationalFunction::zero();
    for f in &sol {
        partial_sum = &partial_sum + f;
    }
    let l = n * (n - 1) / 2;
    let tl = RationalFunction::from_polynomial(Polynomial::monomial(BigRational::one(), l));
    let denom = &one - &tl;
    let head = &one + &partial_sum;
    let f_delta = (&tl * &head).div(&denom)?;
    let rf = head.div(&denom)?;

    let mut per_syllable: BTreeMap<usize, RationalFunction> =
        sys.labels.iter().copied().zip(sol).collect();
    per_syllable.insert(factorial(n), f_delta);
    Ok(GeneratingFunction { n, kind, rf, per_syllable })
}

// ---------------------------------------------------------------------------
// Real roots.

/// Sturm chain of a squarefree polynomial: `p, p', then negated remainders`.
fn sturm_chain(sf: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![sf.clone(), sf.derivative()];
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.is_zero() {
            chain.pop();
            break;
        }
        let rem = a.divrem(b).unwrap().1;
        if rem.is_zero() {
            break;
        }
        chain.push(-&rem);
    }
    chain
}

/// Sign variations of the chain at `x`; by Sturm's theorem the number of
/// roots in `(a, b]` is `variations(a) − variations(b)`.
fn sign_variations(chain: &[Polynomial], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last: Option<bool> = None; // sign of the previous nonzero value
    for p in chain {
        let v = p.eval_at(x);
        if v.is_zero() {
            continue;
        }
        let sign = v.is_positive();
        if let Some(prev) = last {
            if prev != sign {
                count += 1;
            }
        }
        last = Some(sign);
    }
    count
}

/// Every root of `p` lies strictly inside `(−bound, bound)`.
fn cauchy_bound(p: &Polynomial) -> BigRational {
    let lead = p.leading_coeff().unwrap().abs();
    let max = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::from_integer(BigInt::from(2))
}

/// Sharpen the midpoint of a certified interval around a simple root by
/// Newton steps in `f64`, never leaving the interval; the midpoint already
/// satisfies the width contract, so this only tightens the final double.
fn newton_polish(sf: &Polynomial, deriv: &Polynomial, lo: f64, hi: f64) -> f64 {
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let d = deriv.eval_f64(x);
        if d == 0.0 {
            break;
        }
        let next = x - sf.eval_f64(x) / d;
        if !next.is_finite() || next == x {
            break;
        }
        if next < lo || next > hi {
            break;
        }
        x = next;
    }
    x
}

/// All real roots of `p`, ascending, each inside an exact interval narrower
/// than `tol` (multiplicities are collapsed via the squarefree part).
pub fn isolate_real_roots(p: &Polynomial, tol: f64) -> Vec<f64> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let sf = p.squarefree_part();
    if sf.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let chain = sturm_chain(&sf);
    let tol_rat = BigRational::from_float(tol.max(f64::MIN_POSITIVE)).unwrap();
    let bound = cauchy_bound(&sf);
    let half = BigRational::new(BigInt::from(1), BigInt::from(2));

    let mut roots = Vec::new();
    // Work queue of half-open intervals (lo, hi] with their root counts.
    let mut queue = Vec::new();
    let initial = sign_variations(&chain, &(-&bound)) - sign_variations(&chain, &bound);
    if initial > 0 {
        queue.push((-&bound, bound.clone(), initial));
    }
    while let Some((lo, hi, count)) = queue.pop() {
        if count == 1 && (&hi - &lo) < tol_rat {
            let lo_f = lo.to_f64().unwrap();
            let hi_f = hi.to_f64().unwrap();
            roots.push(newton_polish(&chain[0], &chain[1], lo_f, hi_f));
            continue;
        }
        let mid = (&lo + &hi) * &half;
        let left = sign_variations(&chain, &lo) - sign_variations(&chain, &mid);
        if left > 0 {
            queue.push((lo, mid.clone(), left));
        }
        if count - left > 0 {
            queue.push((mid, hi, count - left));
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Real roots of `p` with multiplicities, ascending by value.
fn real_roots_with_multiplicity(p: &Polynomial, tol: f64) -> Vec<(f64, usize)> {
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        for r in isolate_real_roots(&factor, tol) {
            out.push((r, mult));
        }
    }
    out.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    out
}

/// Root/asymptotics analysis of a generating function.
///
/// The growth rate is the reciprocal of the smallest positive real root of
/// the denominator — legitimate here because the series has non-negative
/// coefficients, so its radius of convergence is itself a singularity on the
/// positive axis. Residues are reported in the `Σ_j a_j/(r_j − t)`
/// convention, `a_j = num(r_j)/(−den'(r_j))`, and only when the denominator
/// has exclusively real simple roots (and the fraction is proper); otherwise
/// that section is absent.
pub fn growth_report(gf: &GeneratingFunction, tol: f64) -> Result<GrowthReport> {
    let num = gf.rf.numerator();
    let den = gf.rf.denominator();
    let real_roots = real_roots_with_multiplicity(den, tol);

    let smallest_positive = real_roots
        .iter()
        .map(|&(r, _)| r)
        .filter(|&r| r > 0.0)
        .fold(f64::INFINITY, f64::min);
    assert!(
        smallest_positive.is_finite(),
        "a growth series must have a positive real singularity"
    );

    let total_mult: usize = real_roots.iter().map(|&(_, m)| m).sum();
    let all_simple_real = real_roots.iter().all(|&(_, m)| m == 1)
        && total_mult == den.degree().unwrap_or(0)
        && num.degree().unwrap_or(0) < den.degree().unwrap_or(0);
    let residues = all_simple_real.then(|| {
        let den_deriv = den.derivative();
        real_roots
            .iter()
            .map(|&(r, _)| (r, num.eval_f64(r) / -den_deriv.eval_f64(r)))
            .collect()
    });

    Ok(GrowthReport {
        denominator: den.clone(),
        real_roots,
        residues,
        growth_rate: 1.0 / smallest_positive,
        recurrence: recurrence_from(&gf.rf)?,
    })
}

/// Depressed form, discriminant sign, and trigonometric roots of a cubic.
pub fn cubic_analysis(cubic: &Polynomial) -> Result<CubicAnalysis> {
    if cubic.degree() != Some(3) {
        return Err(Error::NonCubic { degree: cubic.degree() });
    }
    let a = cubic.coeff(3);
    let b = cubic.coeff(2);
    let c = cubic.coeff(1);
    let d = cubic.coeff(0);

    let three = BigRational::from_integer(BigInt::from(3));
    let shift = -&b / (&three * &a);
    // Substituting t = y + shift yields y³ + p·y + q.
    let p = (&three * &a * &c - &b * &b) / (&three * &a * &a);
    let q = (BigRational::from_integer(BigInt::from(2)) * &b * &b * &b
        - BigRational::from_integer(BigInt::from(9)) * &a * &b * &c
        + BigRational::from_integer(BigInt::from(27)) * &a * &a * &d)
        / (BigRational::from_integer(BigInt::from(27)) * &a * &a * &a);
    let discriminant_expr = &(&q * &q) / &BigRational::from_integer(BigInt::from(4))
        + &(&(&p * &p) * &p) / &BigRational::from_integer(BigInt::from(27));

    let root_count = if discriminant_expr.is_negative() {
        3
    } else if discriminant_expr.is_positive() || p.is_zero() {
        1
    } else {
        2
    };

    let mut trig_roots = Vec::new();
    if discriminant_expr.is_negative() {
        // Three real roots force p < 0; then
        // y_k = 2√(−p/3)·cos(θ/3 − 2πk/3), θ = arccos(3q/(2p)·√(−3/p)).
        let pf = p.to_f64().unwrap();
        let qf = q.to_f64().unwrap();
        let magnitude = 2.0 * (-pf / 3.0).sqrt();
        let angle_arg = (3.0 * qf / (2.0 * pf) * (-3.0 / pf).sqrt()).clamp(-1.0, 1.0);
        let theta = angle_arg.acos();
        let shift_f = shift.to_f64().unwrap();
        for k in 0..3 {
            let y = magnitude * (theta / 3.0 - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos();
            trig_roots.push(y + shift_f);
        }
        trig_roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    }

    Ok(CubicAnalysis { p, q, shift, discriminant_expr, root_count, trig_roots })
}

/// Non-negative integer series prefix of a generating function, as exact
/// arbitrary-precision integers.
pub fn series_counts(gf: &GeneratingFunction, kmax: usize) -> Result<Vec<num::BigUint>> {
    let series = series_expand(&gf.rf, kmax)?;
    Ok(series
        .into_iter()
        .map(|c| {
            assert!(c.is_integer() && !c.is_negative(), "growth coefficients must be counts");
            c.to_integer().to_biguint().unwrap()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratfunc::series_expand;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integers(coeffs)
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() < tol
    }

    #[test]
    fn three_strand_system_shape() {
        let sys = build_system(3, PresentationKind::Singular).unwrap();
        assert_eq!(sys.labels, vec![2, 3, 4, 5, 7, 8]);
        // Row for the syllable s1 (length 1): t·(f_2 + f_5 + f_7 + f_8) − f_2 = −t.
        let t = RationalFunction::from_polynomial(p(&[0, 1]));
        let t_minus_1 = RationalFunction::from_polynomial(p(&[-1, 1]));
        let zero = RationalFunction::zero();
        assert_eq!(
            sys.a[0],
            vec![t_minus_1, zero.clone(), zero.clone(), t.clone(), t.clone(), t.clone()]
        );
        assert_eq!(sys.rhs[0], -&t);

        assert_eq!(build_system(2, PresentationKind::Singular).unwrap().labels, vec![3]);
        assert_eq!(build_system(4, PresentationKind::Singular).unwrap().dim(), 25);
        assert_eq!(build_system(3, PresentationKind::Classical).unwrap().labels, vec![2, 3, 4, 5]);
    }

    #[test]
    fn generating_function_fixtures() {
        let f3 = generating_function(3, PresentationKind::Singular).unwrap();
        assert_eq!(f3.rf.numerator(), &p(&[1]));
        assert_eq!(f3.rf.denominator(), &p(&[1, -4, 2, 3, -2]));

        let f2 = generating_function(2, PresentationKind::Singular).unwrap();
        assert_eq!(f2.rf, RationalFunction::new(p(&[1]), p(&[1, -2, 1])).unwrap());

        let c3 = generating_function(3, PresentationKind::Classical).unwrap();
        assert_eq!(c3.rf, RationalFunction::new(p(&[1]), p(&[1, -2, 0, 1])).unwrap());

        let c2 = generating_function(2, PresentationKind::Classical).unwrap();
        assert_eq!(c2.rf, RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap());
    }

    #[test]
    fn per_syllable_pieces_match_closed_forms() {
        let gf = generating_function(3, PresentationKind::Singular).unwrap();
        let cubic = &[1, -3, -1, 2];
        let f2 = RationalFunction::new(p(&[0, 1]), p(cubic)).unwrap();
        assert_eq!(gf.per_syllable[&2], f2);
        assert_eq!(gf.per_syllable[&4], &RationalFunction::from_polynomial(p(&[0, 1])) * &f2);
        // f_7 = t²/((1−2t)·cubic) + t/(1−2t), which reduces to (t − t³)/cubic.
        let direct = &RationalFunction::new(p(&[0, 0, 1]), &p(&[1, -2]) * &p(cubic)).unwrap()
            + &RationalFunction::new(p(&[0, 1]), p(&[1, -2])).unwrap();
        assert_eq!(gf.per_syllable[&7], direct);
        assert_eq!(direct, RationalFunction::new(p(&[0, 1, 0, -1]), p(cubic)).unwrap());
    }

    #[test]
    fn assembled_series_is_one_plus_syllable_sum() {
        for (n, kind) in [
            (2, PresentationKind::Singular),
            (3, PresentationKind::Singular),
            (3, PresentationKind::Classical),
        ] {
            let gf = generating_function(n, kind).unwrap();
            let mut acc = RationalFunction::one();
            for f in gf.per_syllable.values() {
                acc = &acc + f;
            }
            assert_eq!(acc, gf.rf, "n={n} kind={kind:?}");

            let series = series_expand(&gf.rf, 10).unwrap();
            assert!(series.iter().all(|c| c.is_integer() && !c.is_negative()));
        }
    }

    #[test]
    fn root_isolation_fixtures() {
        let roots = isolate_real_roots(&p(&[1, -3, -1, 2]), 1e-12);
        assert_eq!(roots.len(), 3);
        assert!(close(roots[0], -1.161702138, 1e-8));
        assert!(close(roots[1], 0.3210368161, 1e-8));
        assert!(close(roots[2], 1.340665322, 1e-8));

        assert_eq!(isolate_real_roots(&p(&[-1, 1]), 1e-12), vec![1.0]);
        assert!(isolate_real_roots(&p(&[1, 0, 1]), 1e-12).is_empty());
        // Rational roots and repeated factors.
        let double = &(&p(&[1, -1]) * &p(&[1, -1])) * &p(&[1, 1]);
        let roots = isolate_real_roots(&double, 1e-12);
        assert_eq!(roots.len(), 2);
        assert!(close(roots[0], -1.0, 1e-10) && close(roots[1], 1.0, 1e-10));
    }

    #[test]
    fn vieta_checks_on_the_cubic() {
        let roots = isolate_real_roots(&p(&[1, -3, -1, 2]), 1e-12);
        let sum: f64 = roots.iter().sum();
        let product: f64 = roots.iter().product();
        // 2t³ − t² − 3t + 1: sum = 1/2, product = −1/2.
        assert!(close(sum, 0.5, 1e-9));
        assert!(close(product, -0.5, 1e-9));
    }

    #[test]
    fn growth_report_for_three_strands() {
        let gf = generating_function(3, PresentationKind::Singular).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(report.denominator, p(&[1, -4, 2, 3, -2]));
        assert_eq!(report.real_roots.len(), 4);
        assert!(report.real_roots.iter().all(|&(_, m)| m == 1));
        assert!(close(report.growth_rate, 3.114907541, 1e-8));

        let residues = report.residues.as_ref().unwrap();
        let expected = [
            (-1.161702138, -0.06233879045),
            (0.3210368161, 0.4870988600),
            (1.0, -1.0),
            (1.340665322, 0.5752399310),
        ];
        for ((pole, res), (want_pole, want_res)) in residues.iter().zip(expected) {
            assert!(close(*pole, want_pole, 1e-8), "pole {pole} vs {want_pole}");
            assert!(close(*res, want_res, 1e-8), "residue {res} vs {want_res}");
        }
    }

    #[test]
    fn growth_report_edge_cases() {
        // Classical three strands: golden-ratio growth.
        let gf = generating_function(3, PresentationKind::Classical).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        assert!(close(report.growth_rate, (1.0 + 5f64.sqrt()) / 2.0, 1e-9));

        // Two strands singular: the double pole at 1 suppresses residues.
        let gf = generating_function(2, PresentationKind::Singular).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        assert_eq!(report.real_roots, vec![(1.0, 2)]);
        assert!(report.residues.is_none());
        assert!(close(report.growth_rate, 1.0, 1e-12));

        // Plain geometric series: one simple pole, residue 1.
        let gf = generating_function(2, PresentationKind::Classical).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        let residues = report.residues.unwrap();
        assert_eq!(residues.len(), 1);
        assert!(close(residues[0].0, 1.0, 1e-12) && close(residues[0].1, 1.0, 1e-12));
    }

    #[test]
    fn residues_reconstruct_series() {
        let gf = generating_function(3, PresentationKind::Singular).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        let residues = report.residues.unwrap();
        let series = series_expand(&gf.rf, 20).unwrap();
        for (k, b) in series.iter().enumerate().skip(5) {
            let approx: f64 =
                residues.iter().map(|(r, a)| a * r.powi(-(k as i32 + 1))).sum();
            let exact = b.to_f64().unwrap();
            assert!(
                (approx - exact).abs() < 1e-6 * exact,
                "k={k}: {approx} vs {exact}"
            );
        }
    }

    #[test]
    fn cubic_analysis_fixture() {
        let analysis = cubic_analysis(&p(&[1, -3, -1, 2])).unwrap();
        assert_eq!(analysis.p, rat(-19, 12));
        assert_eq!(analysis.q, rat(13, 54));
        assert_eq!(analysis.shift, rat(1, 6));
        assert_eq!(analysis.discriminant_expr, rat(-6183, 46656));
        assert!(analysis.discriminant_expr.is_negative());
        assert_eq!(analysis.root_count, 3);

        // The trigonometric roots agree with certified isolation.
        let isolated = isolate_real_roots(&p(&[1, -3, -1, 2]), 1e-12);
        assert_eq!(analysis.trig_roots.len(), 3);
        for (trig, cert) in analysis.trig_roots.iter().zip(&isolated) {
            assert!(close(*trig, *cert, 1e-10), "{trig} vs {cert}");
        }

        // Substituting t = y + shift must reproduce y³ + p·y + q exactly.
        let shifted = p(&[1, -3, -1, 2])
            .compose(&Polynomial::new(vec![analysis.shift.clone(), BigRational::one()]))
            .scale(&rat(1, 2));
        assert_eq!(
            shifted,
            Polynomial::new(vec![
                analysis.q.clone(),
                analysis.p.clone(),
                BigRational::zero(),
                BigRational::one(),
            ])
        );
    }

    #[test]
    fn cubic_analysis_rejects_other_degrees() {
        assert_eq!(cubic_analysis(&p(&[1, 1])), Err(Error::NonCubic { degree: Some(1) }));
        assert_eq!(cubic_analysis(&Polynomial::zero()), Err(Error::NonCubic { degree: None }));
        let triple = cubic_analysis(&p(&[0, 0, 0, 1])).unwrap();
        assert!(triple.p.is_zero() && triple.q.is_zero());
        assert_eq!(triple.root_count, 1);
    }

    #[test]
    fn ratio_of_consecutive_counts_approaches_growth_rate() {
        let gf = generating_function(3, PresentationKind::Singular).unwrap();
        let report = growth_report(&gf, DEFAULT_ROOT_TOL).unwrap();
        let series = series_expand(&gf.rf, 26).unwrap();
        let gap = |k: usize| {
            let ratio = series[k + 1].to_f64().unwrap() / series[k].to_f64().unwrap();
            (ratio - report.growth_rate).abs()
        };
        assert!(gap(25) < 1e-3);
        for k in 5..20 {
            assert!(gap(k + 1) < gap(k), "gap should shrink at k={k}");
        }
    }
}
