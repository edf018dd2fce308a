//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use arwords::geometry::{
    broken_line, discrepancy_series, find_difference_witness, geom_bound_holds, imbalance_scan, plane_distance_probe,
    plane_fan, rational3,
};
use arwords::graph::{accessibility_path, simulate};
use arwords::independence::{dependence_probe, sign_condition, spread, spread_sequence};
use arwords::matrix::IncidenceMatrix;
use arwords::witness::{
    build_winfty_directive, conjugate_target, lift_path_to_factors, Mode, WinftyOptions, DEFAULT_CAP,
};
use arwords::{
    far_expand, find_factor, frequency_estimate, incidence_of, standard_prefix, AbelianVector, Directive, FarHalt,
    Letter, Word,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;

use common::{naive_compose, naive_imbalance, random_letters, rng, tribonacci_frequencies};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cube(b: i64) -> Vec<AbelianVector> {
    let mut v = Vec::new();
    for x in -b..=b {
        for y in -b..=b {
            for z in -b..=b {
                v.push(AbelianVector::from_i64([x, y, z]));
            }
        }
    }
    v
}

fn accessibility() -> Outcome {
    let start = Instant::now();
    let mut r = rng(1);
    let mut targets = cube(3);
    targets.extend((0..500).map(|_| AbelianVector::from_i64(std::array::from_fn(|_| r.gen_range(-50..=50)))));
    for t in &targets {
        let p = accessibility_path(t).map_err(|e| format!("{t}: {e}"))?;
        ensure(simulate(&p) == *t, || format!("{t}: path ends at {}", simulate(&p)))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2} s"))?;
    Ok(format!("{} targets round-trip in {secs:.2} s", targets.len()))
}

fn explicit_lift() -> Outcome {
    let mut largest = 0;
    for t in cube(2) {
        let p = accessibility_path(&t).map_err(|e| format!("{t}: {e}"))?;
        let w = lift_path_to_factors(&p, DEFAULT_CAP).map_err(|e| format!("{t}: {e}"))?;
        ensure(w.mode == Mode::Explicit, || format!("{t}: lift is symbolic"))?;
        let host = w.host_word(DEFAULT_CAP).ok_or_else(|| format!("{t}: host not materialized"))?;
        largest = largest.max(host.len());
        let (u, v) = (w.u.word().unwrap(), w.v.word().unwrap());
        let [pu, pv] = w.positions.unwrap();
        for (name, f, pos) in [("u", u, pu), ("v", v, pv)] {
            let found = find_factor(f, &host).unwrap_or_default();
            ensure(found.contains(&pos), || format!("{t}: {name} not at {pos}"))?;
        }
        ensure(&u.abelianize() - &v.abelianize() == t, || format!("{t}: wrong difference"))?;
        let oracle = find_difference_witness(&host, &t).ok_or_else(|| format!("{t}: oracle finds no pair"))?;
        ensure(&oracle.u.abelianize() - &oracle.v.abelianize() == t, || format!("{t}: oracle pair is wrong"))?;
    }
    Ok(format!("125 witnesses explicit, largest host {largest} letters"))
}

fn conjugation() -> Outcome {
    let mut r = rng(3);
    for _ in 0..1000 {
        let len = r.gen_range(0..=10);
        let p = random_letters(&mut r, len);
        let t = AbelianVector::from_i64(std::array::from_fn(|_| r.gen_range(-1000..=1000)));
        let c = conjugate_target(&p, &t);
        ensure(c.mul_matrix(&incidence_of(&p)) == t, || format!("p={p:?} t={t}"))?;
    }
    Ok("1000 random (p, t) exact".into())
}

fn compatibility() -> Outcome {
    let mut r = rng(4);
    for _ in 0..1000 {
        let (ul, pl) = (r.gen_range(0..=20), r.gen_range(0..=10));
        let u: Word = random_letters(&mut r, ul).into_iter().collect();
        let p = random_letters(&mut r, pl);
        let raw: Vec<u8> = p.iter().map(|l| l.value()).collect();
        let image: Word = naive_compose(&raw, u.as_bytes()).into_iter().map(|v| Letter::new(v).unwrap()).collect();
        ensure(image.abelianize() == u.abelianize().mul_matrix(&incidence_of(&p)), || format!("u={u} p={raw:?}"))?;
    }
    Ok("1000 random (u, directive) exact".into())
}

fn winfty_options() -> WinftyOptions {
    WinftyOptions::default()
}

fn winfty() -> Outcome {
    let report = build_winfty_directive(5, &winfty_options()).map_err(|e| format!("K = 5: {e}"))?;
    ensure(report.all_verified(), || "a stage failed verification".into())?;
    let prefix = report.generated_prefix(10_000).map_err(|e| e.to_string())?;
    for s in &report.stages {
        let unit = s.target.sup_norm() <= BigInt::from(1);
        let found = s.mode == Mode::Explicit || find_difference_witness(&prefix, &s.target).is_some();
        ensure(!unit || found, || format!("stage {} not confirmed by search", s.stage))?;
    }
    let occ = report.occurrences();
    ensure(occ.iter().all(|&c| c >= 5), || format!("occurrences {occ:?}"))?;
    let inject = (1..=3).map(|n| AbelianVector::from_i64([n, 0, -n])).collect();
    let opts = WinftyOptions { inject, ..winfty_options() };
    let report = build_winfty_directive(5, &opts).map_err(|e| format!("consequence check: {e}"))?;
    let host = report.stages.last().unwrap().host_length.clone();
    let len = usize::try_from(host).map_err(|_| "host too long".to_string())?;
    let w = report.generated_prefix(len).map_err(|e| e.to_string())?;
    let worst = imbalance_scan(&w, w.len()).map_err(|e| e.to_string())?.into_iter().max().unwrap_or(0);
    ensure(worst >= 3, || format!("imbalance {worst}"))?;
    Ok(format!("occurrences {occ:?}, imbalance {worst}"))
}

fn geometry() -> Outcome {
    let report = build_winfty_directive(5, &winfty_options()).map_err(|e| format!("K = 5 word unavailable: {e}"))?;
    let deepest = report.stages.last().unwrap();
    let len = usize::try_from(deepest.host_length.clone()).map_err(|_| "host too long".to_string())?;
    let w = report.generated_prefix(len).map_err(|e| e.to_string())?;
    let f = frequency_estimate(&report.directive.as_periodic().map_err(|e| e.to_string())?, 60)
        .map_err(|e| e.to_string())?;
    let points: Vec<_> = broken_line(&w).into_iter().map(|c| rational3(&AbelianVector::from_counts(c))).collect();
    for (k, plane) in plane_fan(&f).iter().enumerate() {
        let probe = plane_distance_probe(&points, plane).unwrap();
        ensure(geom_bound_holds(&probe, &deepest.target, plane), || format!("plane {k}"))?;
    }
    Ok(format!("12 planes, prefix of {len} letters"))
}

fn tribonacci() -> Outcome {
    let d: Directive = "123*".parse().unwrap();
    let p = standard_prefix(&"123".parse().unwrap(), 7).map_err(|e| e.to_string())?;
    ensure(p.to_string() == "1213121", || format!("prefix {p}"))?;
    let f = frequency_estimate(&d, 60).map_err(|e| e.to_string())?;
    let err = f.sup_distance(tribonacci_frequencies());
    ensure(err < 1e-6, || format!("frequency off by {err:e}"))?;
    let w = standard_prefix(&d, 10_000).map_err(|e| e.to_string())?;
    let scan = imbalance_scan(&w, w.len()).map_err(|e| e.to_string())?;
    let observed = scan.iter().copied().max().unwrap_or(0) as i64;
    let oracle = (1..=w.len()).map(|n| naive_imbalance(w.as_bytes(), n)).max().unwrap_or(0);
    ensure(observed == oracle, || format!("imbalance {observed}, oracle {oracle}"))?;
    let series = discrepancy_series(&d, 10_000, 60).map_err(|e| e.to_string())?;
    let half = series.len() / 2;
    let first = series[..=half].iter().max().unwrap();
    let all = series.iter().max().unwrap();
    ensure(all == first, || format!("running max grows from {first} to {all}"))?;
    Ok(format!("frequency error {err:.1e}, imbalance {observed}, discrepancy max {:.4}", as_f64(all)))
}

fn as_f64(x: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN)
}

fn spreads() -> Outcome {
    let mut checked = 0;
    for l in cube(5) {
        if !sign_condition(&l) {
            continue;
        }
        for i in Letter::ALL {
            let next = IncidenceMatrix::ar(i).mul_column(&l);
            ensure(spread(&next) <= spread(&l), || format!("sigma_{i} raises spread of {l} to {next}"))?;
            checked += 1;
        }
    }
    let t =
        spread_sequence(&"1".parse().unwrap(), &AbelianVector::from_i64([1, -1, 0]), 1).map_err(|e| e.to_string())?;
    let d: Vec<i64> = t.spreads.iter().map(|s| i64::try_from(s).unwrap()).collect();
    ensure(d == [2, 1], || format!("D = {d:?}"))?;
    let probe = dependence_probe(&"123*".parse().unwrap(), 3, 40).map_err(|e| e.to_string())?;
    ensure(probe.min_abs_float > 1e-3, || format!("min |f.l0| = {}", probe.min_abs_float))?;
    Ok(format!("{checked} single steps, D = {d:?}, min |f.l0| = {:.5} at {}", probe.min_abs_float, probe.argmin))
}

fn far() -> Outcome {
    let q = [7, 2, 1].map(|x| BigRational::from_integer(x.into()));
    let e = far_expand(&q, 100).map_err(|e| e.to_string())?;
    let letters: Vec<u8> = e.letters.iter().map(|l| l.value()).collect();
    ensure(letters == [1, 1, 2, 1], || format!("letters {letters:?}"))?;
    ensure(e.remainder == [0, 0, 1].map(|x| BigRational::from_integer(x.into())), || "remainder".into())?;
    ensure(e.halt == FarHalt::ZeroEntry, || format!("halt {}", e.halt))?;
    let d: Directive = "123*".parse().unwrap();
    let f = frequency_estimate(&d, 60).map_err(|e| e.to_string())?;
    let e = far_expand(&f.0, 100).map_err(|e| e.to_string())?;
    let expected = d.take(e.letters.len()).map_err(|e| e.to_string())?;
    let agree = e.letters.iter().zip(&expected).take_while(|(a, b)| a == b).count();
    ensure(agree >= 10, || format!("only {agree} letters recovered"))?;
    Ok(format!("(7,2,1) exact, {agree} letters of 123* recovered"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("accessibility round trip", accessibility),
        ("explicit lift", explicit_lift),
        ("conjugation", conjugation),
        ("compatibility law", compatibility),
        ("w-infinity construction", winfty),
        ("plane fan contrapositive", geometry),
        ("tribonacci sanity", tribonacci),
        ("spread", spreads),
        ("F_AR", far),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {detail}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
