//! Acceptance suite. Runs every criterion in order and prints one PASS/FAIL
//! line each; exits nonzero if any fails.

mod common;

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use acwb::curves::{self, all_slopes, enumerate_candidates, is_candidate, partition, z3_class, Label, PunctureLabeling};
use acwb::family::{gersten_certificate, gersten_prefix, presentation_ln1, GERSTEN_MULTIPLY_STEPS};
use acwb::kirby::{ComponentKind, FramedLinkMatrix};
use acwb::presentation::canonical_relator;
use acwb::{hybrid_trivialize, search, verify, SearchConfig, SearchOutcome, Sign, Word};
use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

/// Exponent notation, e.g. `x^2y^{-1}x`, with generator names `names`.
fn exponent_form(w: &Word, names: &[&str]) -> String {
    let mut out = String::new();
    let letters = w.letters();
    let mut k = 0;
    while k < letters.len() {
        let l = letters[k];
        let mut run = 1;
        while k + run < letters.len() && letters[k + run] == l {
            run += 1;
        }
        let e = if l.is_positive() { run as i64 } else { -(run as i64) };
        out.push_str(names[l.generator() as usize - 1]);
        match e {
            1 => {}
            2..=9 => out.push_str(&format!("^{e}")),
            _ => out.push_str(&format!("^{{{e}}}")),
        }
        k += run;
    }
    out
}

fn within(started: Instant, limit: Duration) -> Result<Duration, String> {
    let t = started.elapsed();
    ensure(t < limit, || format!("took {t:?}, limit {limit:?}"))?;
    Ok(t)
}

fn gersten_replay() -> Result<String, String> {
    let began = Instant::now();
    let cert = gersten_certificate();
    let report = verify(&cert);
    ensure(report.valid, || format!("certificate invalid: {:?}", report.failure))?;

    let prefix = gersten_prefix();
    let after_multiply = report.steps[GERSTEN_MULTIPLY_STEPS - 1].result.relator(1).clone();
    let core = canonical_relator(&after_multiply);
    let printed = Word::parse("xxYxYxxY").unwrap();
    ensure(core == canonical_relator(&printed), || format!("core after multiply is {after_multiply}"))?;
    let s1 = exponent_form(&after_multiply, &["x", "y"]);
    ensure(s1 == "x^2y^{-1}xy^{-1}x^2y^{-1}", || format!("got {s1}"))?;

    let after_nielsen = report.steps[prefix.moves.len() - 1].result.relator(1).clone();
    let (_, core) = after_nielsen.cyclic_reduce();
    let s2 = exponent_form(&core, &["x", "z"]);
    ensure(s2 == "x^{-1}z^3", || format!("got {s2}"))?;
    let t = within(began, Duration::from_secs(1))?;
    Ok(format!("{} moves, {s1} then {s2}, {t:.2?}", cert.moves.len()))
}

fn easy_members() -> Result<String, String> {
    let mut notes = Vec::new();
    for n in [0, 1] {
        let began = Instant::now();
        let p = presentation_ln1(n).unwrap();
        let cfg = SearchConfig::new(p.total_length() + 6, 24);
        let out = search(&p, &cfg).map_err(|e| e.to_string())?;
        let SearchOutcome::Found { depth, certificate, stats } = &out else {
            return Err(format!("n={n}: {}", out.status()));
        };
        let report = verify(certificate);
        ensure(report.valid, || format!("n={n}: certificate fails {:?}", report.failure))?;
        ensure(certificate.start == p, || format!("n={n}: certificate starts elsewhere"))?;
        let t = within(began, Duration::from_secs(60))?;
        notes.push(format!("n={n} depth {depth} visited {} {t:.2?}", stats.visited));
    }
    Ok(notes.join(", "))
}

fn hybrid_member() -> Result<String, String> {
    let began = Instant::now();
    let p = presentation_ln1(2).unwrap();
    let prefix = gersten_prefix();
    let endpoint = prefix.replay().map_err(|(s, e)| format!("prefix step {s}: {e}"))?;
    let cfg = SearchConfig::new(endpoint.total_length() + 6, 24);
    let out = hybrid_trivialize(&p, &prefix, &cfg).map_err(|e| e.to_string())?;
    let cert = out.certificate().ok_or_else(|| format!("status {}", out.status()))?;
    ensure(cert.moves[..prefix.moves.len()] == prefix.moves[..], || "prefix not kept".into())?;
    let report = verify(cert);
    ensure(report.valid, || format!("end-to-end verify fails {:?}", report.failure))?;
    let t = within(began, Duration::from_secs(60))?;
    Ok(format!("{} prefix + {} suffix moves, {t:.2?}", prefix.moves.len(), cert.moves.len() - prefix.moves.len()))
}

fn exhaustion_counts(max_len: usize, max_depth: usize) -> Result<u64, String> {
    let p = presentation_ln1(3).unwrap();
    let mut counts = Vec::new();
    for workers in [1, 1, 1, 1, 1, 4, 0] {
        let mut cfg = SearchConfig::new(max_len, max_depth);
        cfg.workers = workers;
        let out = search(&p, &cfg).map_err(|e| e.to_string())?;
        ensure(matches!(out, SearchOutcome::Exhausted { .. }), || {
            format!("L={max_len}: {} with {workers} workers", out.status())
        })?;
        counts.push(out.stats().visited);
    }
    ensure(counts.iter().all(|&c| c == counts[0]), || format!("L={max_len}: counts differ {counts:?}"))?;
    let naive = naive_bfs(&p, max_len, max_depth);
    ensure(!naive.found, || format!("L={max_len}: oracle reached the trivial class"))?;
    ensure(naive.visited as u64 == counts[0], || {
        format!("L={max_len}: search {} vs oracle {}", counts[0], naive.visited)
    })?;
    Ok(counts[0])
}

fn exhaustion_determinism() -> Result<String, String> {
    let began = Instant::now();
    let stated = exhaustion_counts(13, 8)?;
    let wider = exhaustion_counts(19, 8)?;
    let t = within(began, Duration::from_secs(600))?;
    Ok(format!("L=13 D=8 visited {stated}; L=19 D=8 visited {wider}; 5 runs, 1/4/all workers, oracle agree, {t:.2?}"))
}

fn abelianization_invariant() -> Result<String, String> {
    const CAP: usize = 60;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut applied = 0;
    for n in 0..=5 {
        let mut p = presentation_ln1(n).unwrap();
        let det = p.abelianization_determinant().unwrap().abs();
        let mut count = 0;
        while count < 10_000 {
            let m = random_move(&mut rng, p.rank());
            let Ok(q) = m.apply(&p) else { continue };
            if q.total_length() > CAP || q.rank() > 4 {
                continue;
            }
            let d = q.abelianization_determinant().map_err(|e| e.to_string())?.abs();
            let oracle = cofactor_det(&q.abelianization_matrix()).abs();
            ensure(d == det && oracle == det as i128, || format!("n={n}: |det| {d} (oracle {oracle}) after {m}"))?;
            p = q;
            count += 1;
        }
        applied += count;
    }
    for n in 0..=50 {
        let p = presentation_ln1(n).unwrap();
        let d = p.abelianization_determinant().unwrap();
        ensure(d == 1, || format!("n={n}: det {d}"))?;
        ensure((n + 1) - n == d, || "closed form".into())?;
    }
    Ok(format!("{applied} legal moves from n=0..5 keep |det|=1; det=1 for n<=50"))
}

fn two_handles(rows: &[&[i64]]) -> FramedLinkMatrix {
    FramedLinkMatrix::two_handles(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn kirby_blow_down() -> Result<String, String> {
    let neg = two_handles(&[&[-1, 1], &[1, 0]]).blow_down(1).map_err(|e| e.to_string())?;
    ensure(neg == two_handles(&[&[1]]), || format!("got {neg:?}"))?;
    let pos = two_handles(&[&[1, 1], &[1, 0]]).blow_down(1).map_err(|e| e.to_string())?;
    ensure(pos == two_handles(&[&[-1]]), || format!("got {pos:?}"))?;
    Ok("[[-1,1],[1,0]] -> [[1]], [[1,1],[1,0]] -> [[-1]]".into())
}

fn hopf_reachability() -> Result<String, String> {
    const BOUND: i64 = 20;
    let start = FramedLinkMatrix::empty().add_hopf_pair();
    let mut seen: HashSet<FramedLinkMatrix> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(m) = queue.pop_front() {
        for (i, j) in [(1, 2), (2, 1)] {
            for sign in [Sign::Plus, Sign::Minus] {
                let Ok(next) = m.slide(i, j, sign) else { continue };
                if next.framing(1).abs() > BOUND {
                    continue;
                }
                ensure(next.framing(2) == 0, || format!("dotted framing {}", next.framing(2)))?;
                ensure(next.kind(2) == ComponentKind::Dotted, || "kind changed".into())?;
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let framings: BTreeSet<i64> = seen.iter().map(|m| m.framing(1)).collect();
    let evens: BTreeSet<i64> = (-BOUND..=BOUND).filter(|f| f % 2 == 0).collect();
    ensure(framings == evens, || format!("reached {framings:?}"))?;
    Ok(format!("{} framings, all even, |f| <= {BOUND}", framings.len()))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> FramedLinkMatrix {
    let n = rng.gen_range(2..=6);
    let kinds: Vec<ComponentKind> = (0..n)
        .map(|_| if rng.gen_bool(0.25) { ComponentKind::Dotted } else { ComponentKind::TwoHandle })
        .collect();
    let mut e = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let both_dotted = kinds[i] == ComponentKind::Dotted && kinds[j] == ComponentKind::Dotted;
            let v = if both_dotted { 0 } else { rng.gen_range(-5..=5) };
            e[i][j] = v;
            e[j][i] = v;
        }
    }
    FramedLinkMatrix::new(e, kinds).unwrap()
}

fn slide_determinant() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut slides, mut matrices) = (0, 0);
    while slides < 10_000 {
        let mut m = random_matrix(&mut rng);
        let det = cofactor_det(m.entries());
        ensure(m.det().map_err(|e| e.to_string())? as i128 == det, || "Bareiss vs cofactor".into())?;
        matrices += 1;
        for _ in 0..10 {
            let n = m.size();
            let (i, j) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
            let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let Ok(next) = m.slide(i, j, sign) else { continue };
            let d = cofactor_det(next.entries());
            ensure(d == det, || format!("det {det} -> {d} sliding {i} over {j}"))?;
            ensure(next.det().map_err(|e| e.to_string())? as i128 == det, || "library det differs".into())?;
            m = next;
            slides += 1;
        }
    }
    Ok(format!("{slides} legal slides over {matrices} matrices"))
}

fn curve_enumeration() -> Result<String, String> {
    let began = Instant::now();
    let lab = PunctureLabeling::default();
    let oracle_candidate = |a: i64, b: i64| {
        let side = |l: Label| oracle_side(a, b, lab.point(l));
        side(Label::L1) != side(Label::L2)
    };
    let mut total = 0;
    for h in 1..=50 {
        let got = enumerate_candidates(h, &lab).map_err(|e| e.to_string())?;
        let mut want = BTreeSet::new();
        for a in -h..=h {
            for b in -h..=h {
                if gcd(a, b) == 1 && oracle_candidate(a, b) {
                    let (a, b) = if a < 0 || (a == 0 && b < 0) { (-a, -b) } else { (a, b) };
                    want.insert((a, b));
                }
            }
        }
        let got_set: BTreeSet<(i64, i64)> = got.iter().map(|s| (s.a(), s.b())).collect();
        ensure(got_set == want, || format!("H={h}: {} vs oracle {}", got_set.len(), want.len()))?;
        ensure(got.windows(2).all(|w| w[0] < w[1]), || format!("H={h}: not sorted"))?;
        total = got.len();
    }
    let mut classes = BTreeSet::new();
    let mut gamma = 0;
    for s in all_slopes(50) {
        let p = partition(s, &lab);
        let oracle_pairs: BTreeSet<BTreeSet<Label>> = [true, false]
            .iter()
            .map(|&side| Label::ALL.iter().copied().filter(|&l| oracle_side(s.a(), s.b(), lab.point(l)) == side).collect())
            .collect();
        let pairs: BTreeSet<BTreeSet<Label>> = p.sides.iter().map(|side| side.iter().copied().collect()).collect();
        ensure(pairs == oracle_pairs, || format!("{s}: partition {p} disagrees with oracle"))?;
        classes.insert(s.parity());
        if s.parity() == (1, 1) {
            gamma += 1;
            ensure(!is_candidate(s, &lab), || format!("{s} is a candidate"))?;
            ensure(z3_class(s, &lab) != 0, || format!("{s} has trivial Z/3 class"))?;
        } else {
            ensure(is_candidate(s, &lab) && z3_class(s, &lab) == 0, || format!("{s} should be a candidate"))?;
        }
        ensure(curves::classify(s, &lab).candidate == (z3_class(s, &lab) == 0), || format!("{s}: criteria disagree"))?;
    }
    ensure(classes == BTreeSet::from([(0, 1), (1, 0), (1, 1)]), || format!("parity classes {classes:?}"))?;
    let t = within(began, Duration::from_secs(10))?;
    Ok(format!("H<=50: {total} candidates, {gamma} odd/odd slopes excluded, {t:.2?}"))
}

fn word_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..10_000 {
        let raw = random_raw(&mut rng, 64, 3);
        let w = Word::from_signed(&raw);
        let want = naive_reduce(&raw);
        ensure(to_raw(&w) == want, || format!("reduce {raw:?}"))?;
        let (c, core) = w.cyclic_reduce();
        ensure(core.is_cyclically_reduced(), || format!("core of {raw:?} not cyclically reduced"))?;
        let back: Vec<i32> = [to_raw(&c), to_raw(&core), raw_inverse(&to_raw(&c))].concat();
        ensure(naive_reduce(&back) == want, || format!("factorization of {raw:?} does not multiply back"))?;
    }
    Ok("10000 random words, length <= 64".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check); 10] = [
        ("Gersten replay", gersten_replay),
        ("easy family members", easy_members),
        ("hybrid n=2", hybrid_member),
        ("bounded exhaustion determinism", exhaustion_determinism),
        ("abelianization invariant", abelianization_invariant),
        ("Kirby blow-down", kirby_blow_down),
        ("Hopf-pair framing reachability", hopf_reachability),
        ("slide determinant invariance", slide_determinant),
        ("curve enumeration", curve_enumeration),
        ("word-engine oracle equivalence", word_oracle),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|e| Err(e.downcast_ref::<String>().cloned().unwrap_or_else(|| "panicked".into())));
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
