//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use lights_fixture::verify::{component_count, nth_component, playout_check, PlayoutConfig};
use lights_fixture::{
    best_line, fold_trace, grundy_fast, grundy_oracle, legal_moves, outcome, parse_component,
    parse_position, position_value, validate_line, Component, GrundyValue, Move, Outcome,
    PositionMove, Run, TranspositionTable, WinningLine,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use GrundyValue::{Finite, Moon};

type Check = Result<String, String>;
type Criterion = fn() -> Check;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn all_components(max_len: usize) -> impl Iterator<Item = Component> {
    (0..=max_len).flat_map(|len| (0..1u64 << len).map(move |bits| Component::from_bits(len, bits)))
}

fn three_piece_table() -> Check {
    let start = Instant::now();
    let names = ["bbb", "bbs", "bsb", "sbb", "ssb", "sbs", "bss", "sss"];
    let want = [Finite(3), Finite(3), Moon, Finite(3), Finite(1), Finite(3), Finite(1), Finite(1)];
    let memo = TranspositionTable::new();
    for (name, want) in names.iter().zip(want) {
        let c = parse_component(name).unwrap();
        let (fast, oracle) = (grundy_fast(&c), grundy_oracle(&c, &memo));
        ensure(fast == want && oracle == want, || {
            format!("{name}: fast {fast} oracle {oracle}, expected {want}")
        })?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("8/8 rows match for fast solver and oracle".into())
}

/// Case-by-case closed forms for bulbs(k) sockets(m) bulbs(n), k, m > 0.
fn literal_formula(k: u64, m: u64, n: u64) -> GrundyValue {
    let odd = |x: u64| x % 2 == 1;
    let sign = |x: u64| if odd(x) { -1i64 } else { 1 };
    let (k, n_signed) = (k as i64, n as i64);
    let v = match n {
        // bulbs(k) sockets(m)
        0 if odd(m) => k + 1,
        0 => k,
        1 if m == 1 => return Moon,
        1 if odd(m) => k,
        1 => k + 1,
        _ if odd(m) => k + n_signed,
        _ => k + n_signed + sign(n),
    };
    Finite(v as u64)
}

fn closed_form_grid() -> Check {
    let start = Instant::now();
    let memo = TranspositionTable::new();
    let mut cells = 0;
    for k in 1..=6u64 {
        for m in 1..=6u64 {
            for n in 0..=6u64 {
                let runs = [Run::Bulbs(k as usize), Run::Sockets(m as usize), Run::Bulbs(n as usize)];
                let c = Component::from_runs(runs.into_iter().filter(|r| !r.is_empty()));
                let want = literal_formula(k, m, n);
                let (fast, oracle) = (grundy_fast(&c), grundy_oracle(&c, &memo));
                ensure(fast == want && oracle == want, || {
                    format!("k={k} m={m} n={n}: fast {fast} oracle {oracle} formula {want}")
                })?;
                cells += 1;
            }
        }
    }
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok(format!("{cells} cells agree with formulas and oracle"))
}

fn exhaustive_equivalence() -> Check {
    let start = Instant::now();
    let memo = TranspositionTable::new();
    let total = component_count(14);
    let mut mismatches = Vec::new();
    for i in 0..total {
        let c = nth_component(i);
        let (fast, oracle) = (grundy_fast(&c), grundy_oracle(&c, &memo));
        if fast != oracle {
            mismatches.push(format!("{c}: fast {fast} oracle {oracle}"));
        }
    }
    ensure(total == (1 << 15) - 1, || format!("enumerated {total}"))?;
    ensure(mismatches.is_empty(), || format!("{} mismatches, first {:?}", mismatches.len(), mismatches.first()))?;
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{total} components, 0 mismatches in {:?}", start.elapsed()))
}

fn worked_sum() -> Check {
    let start = Instant::now();
    let position = parse_position("b2s3b5s1b4s2b2 + b2s1b3s1b1s3b1").unwrap();
    let [left, right] = position.components() else { return Err("expected two components".into()) };
    let folds: Vec<GrundyValue> = fold_trace(left).iter().map(|s| s.value).collect();
    ensure(folds.ends_with(&[Finite(7), Finite(12), Finite(14)]), || format!("left folds {folds:?}"))?;
    ensure(grundy_fast(left) == Finite(14), || "left is not *14".into())?;
    ensure(grundy_fast(right) == Moon, || "right is not the moon".into())?;
    ensure(position_value(&position) == Moon, || "sum is not the moon".into())?;
    ensure(outcome(&position) == Outcome::N, || "outcome is not N".into())?;

    // two carry-ons on the right, one on the left, then the quiet win
    let line = WinningLine {
        moves: vec![
            PositionMove::new(1, Move::shock(2)),
            PositionMove::new(1, Move::shock(5)),
            PositionMove::new(0, Move::shock(10)),
            PositionMove::new(0, Move::fix(9)),
        ],
    };
    let after_shocks = WinningLine { moves: line.moves[..3].to_vec() }.play(&position).unwrap();
    ensure(after_shocks.to_string() == "bbsssbbbbbbbbbssbb + bbbbbbsssb", || {
        format!("after carry-ons: {after_shocks}")
    })?;
    ensure(validate_line(&position, &line), || "explicit line rejected".into())?;
    let end = line.play(&position).unwrap();
    let end_values: Vec<_> = end.components().iter().map(grundy_fast).collect();
    ensure(end_values == [Finite(6), Finite(6)], || format!("end values {end_values:?}"))?;

    let found = best_line(&position).ok_or("best_line returned none")?;
    ensure(validate_line(&position, &found), || "best_line result rejected".into())?;
    let found_end = found.play(&position).unwrap();
    ensure(position_value(&found_end) == Finite(0), || "best_line does not end at 0".into())?;
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok(format!(
        "folds *7, *12, *14; right moon; sum moon; N; explicit line valid; best_line {} moves to 0",
        found.moves.len()
    ))
}

fn playout_consistency() -> Check {
    let start = Instant::now();
    let config = PlayoutConfig { max_pieces: 10, max_components: 3, samples: 1000, seed: 42 };
    let report = playout_check(config);
    ensure(report.all_agree(), || format!("disagreements: {:?}", report.disagreements))?;
    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{}/{} positions agree", report.agreements, config.samples))
}

fn moon_absorbs() -> Check {
    let memo = TranspositionTable::new();
    let moons: Vec<Component> = all_components(10).filter(|c| grundy_oracle(c, &memo) == Moon).collect();
    ensure(!moons.is_empty(), || "no moon components found".into())?;
    let mut checked = 0;
    for x in &moons {
        for k in 0..=3 {
            for m in 0..=3 {
                let c = Component::prefixed(k, m, x);
                ensure(grundy_fast(&c) == Moon, || format!("{c} is not the moon"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} moon components x 16 prefixes = {checked} checks", moons.len()))
}

fn colon() -> Check {
    let memo = TranspositionTable::new();
    let mut classes: BTreeMap<u64, Vec<Component>> = BTreeMap::new();
    for x in all_components(8).filter(|x| x.is_empty() || x.starts_with_bulb()) {
        if let Finite(i) = grundy_oracle(&x, &memo) {
            classes.entry(i).or_default().push(x);
        }
    }
    let mut pairs = 0u64;
    for class in classes.values() {
        for k in 0..=3 {
            for m in 0..=3 {
                let values: Vec<GrundyValue> = class
                    .iter()
                    .map(|x| grundy_oracle(&Component::prefixed(k, m, x), &memo))
                    .collect();
                ensure(values.windows(2).all(|w| w[0] == w[1]), || {
                    format!("prefix ({k}, {m}) splits class of {}", class[0])
                })?;
                let n = class.len() as u64;
                pairs += n * (n - 1) / 2;
            }
        }
    }
    Ok(format!("{} value classes, {pairs} prefixed pairs coincide", classes.len()))
}

fn carry_on_values() -> Check {
    let memo = TranspositionTable::new();
    let mut shocks = 0;
    for c in all_components(12) {
        let Finite(i) = grundy_oracle(&c, &memo) else { continue };
        for mv in legal_moves(&c).into_iter().filter(|m| m.kind.is_shock()) {
            let next = lights_fixture::apply(&c, mv).unwrap();
            let v = grundy_oracle(&next, &memo);
            ensure(v == Finite(i), || format!("{c} -> {next}: {v}, expected {i}"))?;
            shocks += 1;
        }
    }
    Ok(format!("{shocks} carry-on moves keep their value"))
}

fn performance() -> Check {
    const PIECES: usize = 1_000_000;
    const LIMIT: Duration = Duration::from_millis(50);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let random = Component::from_runs((0..PIECES).map(|_| {
        if rng.gen_bool(0.5) {
            Run::Bulbs(1)
        } else {
            Run::Sockets(1)
        }
    }));
    // never reaches the moon, so the whole component is scanned
    let full_scan = Component::from_runs((0..PIECES / 3).flat_map(|_| [Run::Bulbs(1), Run::Sockets(2)]));
    let mut report = Vec::new();
    for (name, c) in [("random", &random), ("full-scan", &full_scan)] {
        ensure(c.len() >= PIECES - 2, || format!("{name} has {} pieces", c.len()))?;
        let best = (0..3)
            .map(|_| {
                let start = Instant::now();
                std::hint::black_box(grundy_fast(std::hint::black_box(c)));
                start.elapsed()
            })
            .min()
            .unwrap();
        within(best, LIMIT).map_err(|e| format!("{name}: {e}"))?;
        report.push(format!("{name} {best:?}"));
    }
    ensure(grundy_fast(&full_scan).finite().is_some(), || "full-scan component hit the moon".into())?;
    Ok(report.join(", "))
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 9] = [
        ("AC1 three-piece table", three_piece_table),
        ("AC2 closed-form grid", closed_form_grid),
        ("AC3 exhaustive oracle equivalence (len <= 14)", exhaustive_equivalence),
        ("AC4 worked two-component sum", worked_sum),
        ("AC5 play-out vs nim-sum outcome", playout_consistency),
        ("AC6 moon absorbs prefixes", moon_absorbs),
        ("AC7 prefix value depends only on suffix value", colon),
        ("AC8 carry-on moves keep finite values", carry_on_values),
        ("AC9 linear scan of 10^6 pieces < 50 ms", performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
