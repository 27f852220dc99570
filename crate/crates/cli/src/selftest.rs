//! Acceptance suites, run by `ratinterp selftest` and by the `acceptance`
//! test target.
//!
//! Every suite draws its instances from fixed seeds, so a failure is
//! reproducible from its report line.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use ratinterp_core::harness::{
    dense_decode_oracle, random_coprime_pair, random_instance, random_poly, random_uni_poly, resultant,
    resultant_bound, CountingBlackBox, InstanceSpec, PairBlackBox,
};
use ratinterp_core::unipoly::{min_deg, top_degree, DecodeCaps};
use ratinterp_core::{
    build_chain, mpoly_decode, success_lower_bound, upoly_decode, BlackBox, BoundMode, Bounds, ExpBase,
    MultiOptions, RationalFunction,
};

use crate::bench::{run_bench, BenchConfig, Param};
use crate::interpolate::{run_algo, Algo};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        write!(f, "{tag} [{:>2}] {}: {}", self.id, self.title, self.detail)
    }
}

pub const CRITERIA: [u8; 12] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12];

/// Suites skipped by `--quick`: the statistical ones and the timing sweep.
pub const SLOW: [u8; 4] = [5, 9, 10, 12];

pub fn title(id: u8) -> &'static str {
    match id {
        1 => "digit-decode round trip",
        2 => "decoder agrees with dense oracle",
        3 => "degree recovery from one value",
        4 => "deterministic univariate interpolation",
        5 => "two-point univariate interpolation with degree bound",
        6 => "scale divides the resultant",
        7 => "ratio bracket",
        8 => "multivariate polynomial round trip",
        9 => "one-query multivariate interpolation",
        10 => "two-query multivariate interpolation",
        11 => "scale invariance",
        12 => "benchmark sweep over T",
        _ => "unknown",
    }
}

pub fn run_all(quick: bool) -> Vec<CriterionReport> {
    CRITERIA.iter().map(|&id| run_criterion(id, quick)).collect()
}

pub fn run_criterion(id: u8, quick: bool) -> CriterionReport {
    let title = title(id);
    if quick && SLOW.contains(&id) {
        return CriterionReport {
            id,
            title,
            status: Status::Skip,
            detail: "skipped by --quick".into(),
        };
    }
    let start = Instant::now();
    let (ok, detail) = match id {
        1 => decode_round_trip(),
        2 => oracle_agreement(),
        3 => degree_recovery(),
        4 => univariate_deterministic(),
        5 => univariate_probabilistic(),
        6 => resultant_divisibility(),
        7 => ratio_bracket(),
        8 => multivariate_round_trip(),
        9 => multivariate_one_query(),
        10 => multivariate_two_query(),
        11 => scale_invariance(),
        12 => bench_sweep(),
        _ => (false, "no such criterion".into()),
    };
    CriterionReport {
        id,
        title,
        status: if ok { Status::Pass } else { Status::Fail },
        detail: format!("{detail} [{}]", secs(start.elapsed())),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.1} s", d.as_secs_f64())
}

fn trial_rng(suite: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64((suite << 40) ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Counts successes of `check` over `0..trials`, in parallel, and lists
/// up to five failing trial numbers.
fn tally(trials: u64, check: impl Fn(u64) -> bool + Sync) -> (u64, Vec<u64>) {
    let fails: Vec<u64> = (0..trials).into_par_iter().filter(|&t| !check(t)).collect();
    (trials - fails.len() as u64, fails)
}

/// Like [`tally`], but trials that would start after `limit` count as
/// failures without running.
fn tally_within(trials: u64, limit: Duration, check: impl Fn(u64) -> bool + Sync) -> (u64, Vec<u64>) {
    let start = Instant::now();
    tally(trials, |t| start.elapsed() <= limit && check(t))
}

fn fail_note(fails: &[u64]) -> String {
    if fails.is_empty() {
        String::new()
    } else {
        let shown: Vec<String> = fails.iter().take(5).map(u64::to_string).collect();
        format!("; failing trials {}", shown.join(","))
    }
}

const DECODE_COEFS: [u64; 3] = [1, 10, 1 << 16];

/// Instance `t` of the round-trip family: up to 50 terms, degree up to
/// 5000, coefficient bound cycling through 1, 10, 2^16.
fn decode_instance(t: u64) -> (ratinterp_core::UniPoly, BigInt, BigInt) {
    let mut rng = trial_rng(1, t);
    let c = DECODE_COEFS[(t % 3) as usize];
    let f = random_uni_poly(&mut rng, 50, 5000, c);
    let c = BigInt::from(c);
    let beta: BigInt = &c * 2u32 + 1u32;
    (f, beta, c)
}

fn decode_round_trip() -> (bool, String) {
    let start = Instant::now();
    let (ok, fails) = tally_within(1000, Duration::from_secs(60), |t| {
        let (f, beta, c) = decode_instance(t);
        upoly_decode(&f.eval(&beta), &beta, &c, DecodeCaps::NONE).as_ref() == Ok(&f)
    });
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(60);
    (
        ok == 1000 && fast,
        format!("{ok}/1000 exact, {} (limit 60 s){}", secs(elapsed), fail_note(&fails)),
    )
}

fn degree_recovery() -> (bool, String) {
    let (ok, fails) = tally(1000, |t| {
        let (f, beta, _) = decode_instance(t);
        let rho = f.eval(&beta);
        top_degree(&rho, &beta).ok() == f.degree() && min_deg(&rho, &beta).ok() == f.min_exp()
    });
    (ok == 1000, format!("{ok}/1000 with both degrees right{}", fail_note(&fails)))
}

fn oracle_agreement() -> (bool, String) {
    let (ok, fails) = tally(1000, |t| {
        let mut rng = trial_rng(2, t);
        let c = rng.gen_range(1..=1000u64);
        let f = random_uni_poly(&mut rng, 40, 200, c);
        let c = BigInt::from(c);
        let beta: BigInt = &c * 2u32 + 1u32 + (t % 4);
        let rho = f.eval(&beta);
        // Every other trial perturbs the value so both decoders must also
        // agree on failures.
        let rho = if t % 2 == 0 { rho } else { rho + BigInt::from(rng.gen_range(-1000i64..=1000)) };
        upoly_decode(&rho, &beta, &c, DecodeCaps::NONE) == dense_decode_oracle(&rho, &beta, &c)
    });
    (ok == 1000, format!("{ok}/1000 agree{}", fail_note(&fails)))
}

/// Instance `t` of the univariate rational family: T <= 20, deg <= 200,
/// C <= 100.
fn uni_family(suite: u64, t: u64) -> (RationalFunction, u64, u64, u64) {
    let mut rng = trial_rng(suite, t);
    let terms = rng.gen_range(1..=20);
    let degree = rng.gen_range(0..=200);
    let coef = rng.gen_range(1..=100);
    let h = random_instance(&InstanceSpec::new(1, terms, degree, coef, rng.gen()))
        .expect("univariate family generates");
    (h, terms, degree, coef)
}

/// Scale-search cap for the interpolation suites. Every suite instance needs
/// far fewer; the cap only bounds the run time of a broken build.
const SEARCH_CAP: u64 = 1_000_000;

fn recovers(algo: Algo, h: &RationalFunction, bounds: &Bounds, opts: &MultiOptions) -> (bool, usize) {
    let mut bb = CountingBlackBox::new(h.clone());
    let r = run_algo(algo, &mut bb, &bounds.clone().with_max_iter(SEARCH_CAP), opts);
    (r.is_ok_and(|r| &r.function == h), bb.queries())
}

fn univariate_deterministic() -> (bool, String) {
    let start = Instant::now();
    let (ok, fails) = tally_within(500, Duration::from_secs(300), |t| {
        let (h, terms, _, coef) = uni_family(4, t);
        let b = Bounds::new(coef).with_terms(terms);
        let o = MultiOptions::default();
        recovers(Algo::Urf1, &h, &b, &o) == (true, 1) && recovers(Algo::Urf2, &h, &b, &o) == (true, 2)
    });
    let elapsed = start.elapsed();
    (
        ok == 500 && elapsed < Duration::from_secs(300),
        format!(
            "{ok}/500 exact with 1 and 2 queries, {} (limit 300 s){}",
            secs(elapsed),
            fail_note(&fails)
        ),
    )
}

fn univariate_probabilistic() -> (bool, String) {
    let results: Vec<(bool, usize)> = (0..500u64)
        .into_par_iter()
        .map(|t| {
            let (h, _, degree, coef) = uni_family(5, t);
            recovers(Algo::Urfp, &h, &Bounds::new(coef).with_degree(degree), &MultiOptions::default())
        })
        .collect();
    let ok = results.iter().filter(|r| r.0).count();
    let fails: Vec<u64> = (0..500).filter(|&t| !results[t as usize].0).collect();
    let queries_ok = results.iter().all(|r| r.1 == 2);
    (
        ok >= 495 && queries_ok,
        format!(
            "{ok}/500 exact (need 495), queries always 2: {queries_ok}{}",
            fail_note(&fails)
        ),
    )
}

fn resultant_divisibility() -> (bool, String) {
    let (ok, fails) = tally(100, |t| {
        let mut rng = trial_rng(6, t);
        let c = rng.gen_range(1..=10u64);
        let (f, g) = random_coprime_pair(&mut rng, 9, 8, c);
        let d = f.degree().unwrap().max(g.degree().unwrap());
        let Ok(res) = resultant(&f, &g) else {
            return false;
        };
        let cb = BigInt::from(c);
        let beta: BigInt = &cb * &cb * 18u32 + 1u32;
        let mu = f.eval(&beta).gcd(&g.eval(&beta));
        !res.is_zero() && (&res % &mu).is_zero() && res.abs() <= resultant_bound(d, c)
    });
    (ok == 100, format!("{ok}/100 coprime pairs{}", fail_note(&fails)))
}

fn ratio_bracket() -> (bool, String) {
    let (uni_ok, uni_fails) = tally(1000, |t| {
        let mut rng = trial_rng(71, t);
        let c = rng.gen_range(1..=100u64);
        let f = random_uni_poly(&mut rng, 20, 200, c);
        let cb = BigInt::from(c);
        let beta: BigInt = &cb * 2u32 + 1u32 + (t % 3) * c;
        let beta1: BigInt = &beta + 1u32;
        let dt = f.degree().unwrap();
        let q = BigRational::new(
            f.eval(&beta) * Pow::pow(&beta1, dt),
            f.eval(&beta1) * Pow::pow(&beta, dt),
        );
        let e = BigRational::one() + BigRational::new(&cb * 2u32, &beta * (&beta - 1u32));
        e.recip() < q && q < e
    });
    let (mv_ok, mv_fails) = tally(1000, |t| {
        let mut rng = trial_rng(72, t);
        let n = rng.gen_range(2..=3usize);
        let c = rng.gen_range(1..=10u64);
        let f = random_poly(&mut rng, n, 10, 4, c);
        let degree = f.total_degree().unwrap();
        let cb = BigInt::from(c);
        let beta: BigInt = &cb * 2u32 + 1u32;
        let mut shifts: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=1000)).collect();
        shifts.sort_unstable();
        let Ok(chain) = build_chain(&beta, &shifts, degree, ExpBase::DPlusOne) else {
            return false;
        };
        let p1 = chain.points();
        let p2 = chain.bumped_last();
        let en = f.leading().unwrap().exps[n - 1];
        let (v1, v2) = (f.eval(p1).unwrap(), f.eval(&p2).unwrap());
        let bn = &p1[n - 1];
        let q = BigRational::new(v1 * Pow::pow(&p2[n - 1], en), v2 * Pow::pow(bn, en));
        let e = BigRational::one() + BigRational::new(&cb * 2u32, (&p1[0] - 1u32) * (bn - 1u32));
        e.recip() < q && q < e
    });
    (
        uni_ok == 1000 && mv_ok == 1000,
        format!(
            "univariate {uni_ok}/1000, multivariate {mv_ok}/1000{}{}",
            fail_note(&uni_fails),
            fail_note(&mv_fails)
        ),
    )
}

fn multivariate_round_trip() -> (bool, String) {
    let (ok, fails) = tally(500, |t| {
        let mut rng = trial_rng(8, t);
        let n = rng.gen_range(1..=4usize);
        let c = rng.gen_range(1..=50u64);
        let f = random_poly(&mut rng, n, 20, 6, c);
        let degree = f.total_degree().unwrap();
        let cb = BigInt::from(c);
        let beta: BigInt = &cb * 2u32 + 1u32;
        let mut shifts: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=20)).collect();
        shifts.sort_unstable();
        let Ok(chain) = build_chain(&beta, &shifts, degree, ExpBase::DPlusOne) else {
            return false;
        };
        let rho = f.eval(chain.points()).unwrap();
        mpoly_decode(chain.points(), &rho, Some(f.len() as u64), degree, &cb, BoundMode::Exact).as_ref() == Ok(&f)
    });
    (ok == 500, format!("{ok}/500 exact{}", fail_note(&fails)))
}

const SHIFT_RANGE: u64 = 1 << 40;
const MV_DEGREE: u64 = 3;

/// Instance `t` of the bivariate family: D = 3, C <= 10, T <= 8.
fn mv_family(suite: u64, t: u64) -> (RationalFunction, u64, u64, u64) {
    let mut rng = trial_rng(suite, t);
    let terms = rng.gen_range(1..=8);
    let coef = rng.gen_range(1..=10);
    let seed = rng.gen();
    let h = random_instance(&InstanceSpec::new(2, terms, MV_DEGREE, coef, seed)).expect("bivariate family generates");
    (h, terms, coef, seed)
}

fn multivariate_one_query() -> (bool, String) {
    let start = Instant::now();
    let (ok, fails) = tally_within(200, Duration::from_secs(600), |t| {
        let (h, terms, coef, seed) = mv_family(9, t);
        let b = Bounds::new(coef)
            .with_terms(terms)
            .with_degree(MV_DEGREE)
            .with_shift_range(SHIFT_RANGE);
        recovers(Algo::Mrf1, &h, &b, &MultiOptions::seeded(seed)) == (true, 1)
    });
    let elapsed = start.elapsed();
    let bound = success_lower_bound(MV_DEGREE, 2, SHIFT_RANGE);
    (
        ok == 200 && elapsed < Duration::from_secs(600),
        format!(
            "{ok}/200 exact with 1 query (guaranteed rate >= 1 - {}), {} (limit 600 s){}",
            BigRational::one() - bound,
            secs(elapsed),
            fail_note(&fails)
        ),
    )
}

fn multivariate_two_query() -> (bool, String) {
    let results: Vec<(bool, usize)> = (0..200u64)
        .into_par_iter()
        .map(|t| {
            let (h, _, coef, seed) = mv_family(10, t);
            let b = Bounds::new(coef)
                .with_degree(MV_DEGREE)
                .with_last_degree(MV_DEGREE)
                .with_shift_range(SHIFT_RANGE);
            recovers(Algo::Mrf2, &h, &b, &MultiOptions::seeded(seed))
        })
        .collect();
    let ok = results.iter().filter(|r| r.0).count();
    let fails: Vec<u64> = (0..200).filter(|&t| !results[t as usize].0).collect();
    let queries_ok = results.iter().all(|r| r.1 == 2);
    (
        ok >= 190 && queries_ok,
        format!(
            "{ok}/200 exact (need 190), queries always 2: {queries_ok}{}",
            fail_note(&fails)
        ),
    )
}

fn same_answer<B1: BlackBox, B2: BlackBox>(algo: Algo, a: B1, b: B2, bounds: &Bounds, opts: &MultiOptions) -> bool {
    let bounds = bounds.clone().with_max_iter(SEARCH_CAP);
    let ra = run_algo(algo, a, &bounds, opts).map(|r| r.function);
    let rb = run_algo(algo, b, &bounds, opts).map(|r| r.function);
    ra.is_ok() && ra == rb
}

fn scaled(h: &RationalFunction, k: &BigInt) -> PairBlackBox {
    let (f, g) = h.scaled_raw(k);
    PairBlackBox::new(f, g).expect("nonzero denominator")
}

fn scale_invariance() -> (bool, String) {
    let (ok, fails) = tally(100, |t| {
        let mut rng = trial_rng(11, t);
        let mut k = rng.gen_range(1..=1_000_000i64);
        if rng.gen_bool(0.5) {
            k = -k;
        }
        let k = BigInt::from(k);
        let coef = rng.gen_range(1..=10);
        let uni = random_instance(&InstanceSpec::new(1, 5, 10, coef, rng.gen())).expect("generates");
        let b = Bounds::new(coef).with_terms(5).with_degree(10);
        let o = MultiOptions::default();
        let uni_ok = [Algo::Urf1, Algo::Urf2, Algo::Urfp]
            .into_iter()
            .all(|a| same_answer(a, CountingBlackBox::new(uni.clone()), scaled(&uni, &k), &b, &o));
        let mv = random_instance(&InstanceSpec::new(2, 4, 2, coef, rng.gen())).expect("generates");
        let b = Bounds::new(coef).with_terms(4).with_degree(2).with_last_degree(2);
        let o = MultiOptions::seeded(rng.gen());
        let mv_ok = [Algo::Mrf1, Algo::Mrf2]
            .into_iter()
            .all(|a| same_answer(a, CountingBlackBox::new(mv.clone()), scaled(&mv, &k), &b, &o));
        uni_ok && mv_ok
    });
    (ok == 100, format!("{ok}/100 scaled pairs give identical output{}", fail_note(&fails)))
}

fn bench_sweep() -> (bool, String) {
    let cfg = BenchConfig {
        algo: Algo::Urf2,
        vary: Param::Terms,
        values: vec![100, 200, 400, 800],
        fixed: "D=1000,C=100,n=1".parse().expect("literal"),
        trials: 5,
        seed: 2024,
        max_iter: Some(SEARCH_CAP),
    };
    let rows = match run_bench(&cfg) {
        Ok(rows) => rows,
        Err(e) => return (false, format!("bench failed: {e}")),
    };
    let all_ok = rows.len() == 20 && rows.iter().all(|r| r.success == 1);
    let means: Vec<String> = cfg
        .values
        .iter()
        .map(|&v| {
            let ts: Vec<u64> = rows.iter().filter(|r| r.terms == v).map(|r| r.time_ms).collect();
            format!("T={v}: {:.1} ms", ts.iter().sum::<u64>() as f64 / ts.len().max(1) as f64)
        })
        .collect();
    (
        all_ok,
        format!(
            "{} rows, success on all: {all_ok}; mean time {}",
            rows.len(),
            means.join(", ")
        ),
    )
}

/// Exit status for a set of reports.
pub fn all_passed(reports: &[CriterionReport]) -> bool {
    reports.iter().all(CriterionReport::passed)
}
