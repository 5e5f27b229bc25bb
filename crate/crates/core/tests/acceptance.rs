//! End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero
//! exit if any criterion fails.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};

use gridfactor::counting::{zero_predicate, CountClass};
use gridfactor::oracle::oracle_counts;
use gridfactor::report::Report;
use gridfactor::series::conjectures::verify_conjectures;
use gridfactor::series::{estimate_spectrum, fit_family, tabulated_order, SeriesModel};
use gridfactor::tables;
use gridfactor::transfer::{expected_vertex_count, is_strongly_connected, ComponentLabel};
use gridfactor::{codes, Counter, GraphFamily, Transfer};

const GOLDEN: &str = include_str!("data/golden_series.tsv");

const TKC_9_100: &str = "550348885165019283285755151853301860827173003486081734884093077979833998668505674221837749197473620246193874089192224295399960428521091684471910843826";
const MS_10_100: &str = "2645121801666648913048490842342065467547225492026995244876289719579663872123046577689940070810418615815546951442200623394560299994468519528133438673321151104001586481523";

const THETA: [f64; 9] = [
    1.618_033_988_749_894_8,
    2.414_213_562_373_095,
    3.694_181_660_123_910_7,
    5.653_202_037_882_443_4,
    8.670_953_897_230_063,
    13.312_178_239_997_254,
    20.451_693_229_411_497,
    31.434_479_637_181_597,
    48.330_852_621_858_437,
];
const THETA_RG: [f64; 9] = [
    1.618_033_988_749_894_8,
    1.732_050_807_568_877_3,
    3.694_181_660_123_910_7,
    4.625_181_601_344_239_5,
    8.670_953_897_230_063,
    11.519_383_004_229_861,
    20.451_693_229_411_497,
    28.070_341_092_405_787,
    48.330_852_621_858_437,
];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn from_report(r: &Report) -> Outcome {
    let bad: Vec<String> = r.failures().map(|c| format!("m={:?} {}: {}", c.m, c.name, c.detail)).collect();
    if bad.is_empty() {
        outcome(true, format!("{} checks", r.checks.len()))
    } else {
        outcome(false, bad.join("; "))
    }
}

struct Ctx {
    transfers: HashMap<usize, Transfer>,
}

impl Ctx {
    fn t(&mut self, m: usize) -> &Transfer {
        self.transfers.entry(m).or_insert_with(|| Transfer::build(m).unwrap())
    }

    fn counter(&mut self, m: usize) -> Counter {
        Counter::new(self.t(m).clone())
    }
}

fn c1(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    for m in 2..=12 {
        let i = m - 2;
        let dm = codes::column_count(m);
        let formula = (3u64.pow(m as u32) + 1) / 2 - u64::from(m % 2 == 1);
        let t = ctx.t(m);
        let dv = t.dstar.vertex_count();
        if dm != formula || dm != tables::D_VERTICES[i] as u64 {
            bad.push(format!("|V(D_{m})| = {dm}"));
        }
        if dv != tables::DSTAR_VERTICES[i] || dv != expected_vertex_count(m) {
            bad.push(format!("|V(D*_{m})| = {dv}"));
        }
        if t.dstar.arc_count() as u64 != dm {
            bad.push(format!("|E(D*_{m})| = {}", t.dstar.arc_count()));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "m = 2..12".into() } else { bad.join("; ") })
}

fn c2(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    for m in 2..=12 {
        let i = m - 2;
        let t = ctx.t(m);
        let c = &t.components;
        let want_b: Vec<usize> = tables::B_STAR.iter().map(|row| row[i]).filter(|&x| x > 0).collect();
        if c.count() != want_b.len() + 1 {
            bad.push(format!("m={m}: {} components", c.count()));
        }
        if c.size(c.a_star()) != tables::A_STAR[i] || c.b_sizes() != want_b {
            bad.push(format!("m={m}: sizes {} {:?}", c.size(0), c.b_sizes()));
        }
        if (c.r_star() == c.a_star()) != (m % 2 == 0) || c.label(c.a_star()) != ComponentLabel::A {
            bad.push(format!("m={m}: A* = R* parity"));
        }
        for k in 0..c.count() {
            if !is_strongly_connected(&t.dstar, c.members(k)) {
                bad.push(format!("m={m}: component {k} not strongly connected"));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "m = 2..12".into() } else { bad.join("; ") })
}

fn c3(ctx: &mut Ctx) -> Outcome {
    let want_r = [2, 4, 6, 15, 20, 56, 70, 210, 252];
    let want_rr = [2, 3, 5, 9, 14, 31, 43, 110, 142];
    let mut got_r = Vec::new();
    let mut got_rr = Vec::new();
    for m in 2..=10 {
        let t = ctx.t(m);
        got_r.push(t.components.size(t.components.r_star()));
        got_rr.push(t.rstarstar.class_count());
    }
    let ok = got_r == want_r && got_rr == want_rr;
    outcome(ok, format!("R* {got_r:?}, R** {got_rr:?}"))
}

fn c4(ctx: &mut Ctx) -> Outcome {
    let mut golden: HashMap<(String, usize), Vec<(usize, BigUint)>> = HashMap::new();
    for line in GOLDEN.lines().filter(|l| !l.is_empty()) {
        let f: Vec<&str> = line.split('\t').collect();
        let key = (f[0].to_string(), f[1].parse().unwrap());
        golden.entry(key).or_default().push((f[2].parse().unwrap(), f[3].parse().unwrap()));
    }
    let mut bad = Vec::new();
    let mut compared = 0;
    for m in 2..=10 {
        let k = ctx.counter(m);
        for family in GraphFamily::ALL {
            let s = k.series(family, 30).unwrap();
            let Some(g) = golden.get(&(family.name().to_string(), m)) else {
                bad.push(format!("{family} m={m}: no golden data"));
                continue;
            };
            if g.len() != 30 {
                bad.push(format!("{family} m={m}: {} golden terms", g.len()));
            }
            for (n, v) in g {
                compared += 1;
                if &s[n - 1] != v {
                    bad.push(format!("{family} m={m} n={n}"));
                }
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("{compared} terms") } else { bad.join("; ") })
}

fn c5(ctx: &mut Ctx) -> Outcome {
    let a = ctx.counter(9).count(GraphFamily::TkC, 100).unwrap().to_string();
    let b = ctx.counter(10).count(GraphFamily::MS, 100).unwrap().to_string();
    let ok = a == TKC_9_100 && b == MS_10_100;
    outcome(ok, format!("tkc(9,100) {} digits, ms(10,100) {} digits", a.len(), b.len()))
}

fn fit(ctx: &mut Ctx, family: GraphFamily, m: usize) -> SeriesModel {
    let k = ctx.counter(m);
    fit_family(&k, family, tabulated_order(family, m)).unwrap()
}

fn round_trip(ctx: &mut Ctx, model: &SeriesModel) -> bool {
    let (family, m) = (model.family.unwrap(), model.m.unwrap());
    let len = model.terms_used + 16;
    let s = ctx.counter(m).series(family, len).unwrap();
    model.expand(len).iter().zip(&s).all(|(a, b)| *a == BigInt::from(b.clone()))
}

fn c6(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut seen = Vec::new();
    for (family, hi) in [(GraphFamily::TkC, 7), (GraphFamily::MS, 7), (GraphFamily::RG, 9)] {
        let mut row = Vec::new();
        for m in 2..=hi {
            let model = fit(ctx, family, m);
            let want = tabulated_order(family, m).unwrap();
            row.push(model.effective_order());
            if model.effective_order() != want {
                bad.push(format!("{family} m={m}: order {} vs {want}", model.effective_order()));
            }
            if !round_trip(ctx, &model) {
                bad.push(format!("{family} m={m}: round trip"));
            }
        }
        seen.push(format!("{family} {row:?}"));
    }
    let detail = if bad.is_empty() { seen.join(", ") } else { format!("{}; fitted {}", bad.join("; "), seen.join(", ")) };
    outcome(bad.is_empty(), detail)
}

fn c7(ctx: &mut Ctx) -> Outcome {
    let want: [&[i64]; 4] = [&[1, -1, -1], &[1, 0, -3], &[1, -2, -7, 2, 3, -1], &[1, 0, -24, 0, 57, 0, -26]];
    let mut bad = Vec::new();
    for (m, q) in (2..=5).zip(want) {
        let model = fit(ctx, GraphFamily::RG, m);
        let q: Vec<BigInt> = q.iter().map(|&x| BigInt::from(x)).collect();
        if model.denominator != q {
            bad.push(format!("rg m={m}: Q = {:?}", model.denominator));
        }
        if !round_trip(ctx, &model) {
            bad.push(format!("rg m={m}: round trip"));
        }
    }
    for family in [GraphFamily::TkC, GraphFamily::MS] {
        for m in 2..=5 {
            let model = fit(ctx, family, m);
            if !round_trip(ctx, &model) {
                bad.push(format!("{family} m={m}: round trip"));
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "rg m=2..5 denominators".into() } else { bad.join("; ") })
}

fn c8(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for m in 2..=10 {
        let k = ctx.counter(m);
        let mut est = HashMap::new();
        for family in GraphFamily::ALL {
            let e = estimate_spectrum(family, m, &k.series(family, 120).unwrap()).unwrap();
            est.insert(family, e);
        }
        for family in [GraphFamily::TkC, GraphFamily::MS] {
            let d = (est[&family].theta - THETA[m - 2]).abs();
            worst = worst.max(d);
            if d > 1e-8 {
                bad.push(format!("{family} m={m}: theta off by {d:.1e}"));
            }
            if m <= 6 && (est[&family].a - 1.0).abs() > 1e-4 {
                bad.push(format!("{family} m={m}: a = {}", est[&family].a));
            }
        }
        let d = (est[&GraphFamily::RG].theta - THETA_RG[m - 2]).abs();
        if d > 1e-6 {
            bad.push(format!("rg m={m}: theta off by {d:.1e}"));
        }
        if m % 2 == 0 && (est[&GraphFamily::RG].theta - est[&GraphFamily::TkC].theta).abs() > 1e-8 {
            bad.push(format!("m={m}: rg and tkc theta differ"));
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { format!("max theta error {worst:.1e}") } else { bad.join("; ") })
}

fn c9(ctx: &mut Ctx) -> Outcome {
    let mut bad = Vec::new();
    for m in 2..=4 {
        let k = ctx.counter(m);
        let rg = k.rg_series(6);
        let tkc = k.split_series(GraphFamily::TkC, 6).unwrap();
        let ms = k.split_series(GraphFamily::MS, 6).unwrap();
        for n in 1..=6 {
            let o = oracle_counts(GraphFamily::RG, m, n).unwrap();
            if o.total != rg[n - 1] || (o.total == 0u32.into()) != zero_predicate(CountClass::Rg, m, n) {
                bad.push(format!("rg {m}x{n}"));
            }
            for (family, split, classes) in [
                (GraphFamily::TkC, &tkc, [CountClass::TkcEven, CountClass::TkcOdd]),
                (GraphFamily::MS, &ms, [CountClass::MsNoShort, CountClass::MsShort]),
            ] {
                let o = oracle_counts(family, m, n).unwrap();
                if o.class0 != split.even[n - 1] || o.class1 != split.odd[n - 1] {
                    bad.push(format!("{family} {m}x{n} split"));
                }
                let zeros = (o.class0 == 0u32.into(), o.class1 == 0u32.into());
                if zeros != (zero_predicate(classes[0], m, n), zero_predicate(classes[1], m, n)) {
                    bad.push(format!("{family} {m}x{n} zero pattern"));
                }
            }
        }
    }
    outcome(bad.is_empty(), if bad.is_empty() { "54 graphs".into() } else { bad.join("; ") })
}

fn c10(ctx: &mut Ctx) -> Outcome {
    let mut r = Report::default();
    for m in 2..=12 {
        r.extend(ctx.t(m).check_structure());
    }
    let needed = [
        "D* symmetric",
        "arcs preserve 1-count parity",
        "odd-0s subdigraph bipartite",
        "palindromes lie in A*",
        "R* closed under reversal",
        "|F_m| = Fib(m-1)",
    ];
    let missing: Vec<&str> = needed.iter().copied().filter(|n| !r.checks.iter().any(|c| c.name == *n)).collect();
    if !missing.is_empty() {
        return outcome(false, format!("checks not run: {missing:?}"));
    }
    from_report(&r)
}

fn c11(ctx: &mut Ctx) -> Outcome {
    let mut r = Report::default();
    for m in 2..=12 {
        r.extend(verify_conjectures(ctx.t(m)));
    }
    from_report(&r)
}

fn main() {
    let criteria: [(&str, fn(&mut Ctx) -> Outcome); 11] = [
        ("structural cardinalities", c1),
        ("component structure", c2),
        ("R* and R** sizes", c3),
        ("golden series", c4),
        ("big-value spot checks", c5),
        ("recurrence orders", c6),
        ("generating functions", c7),
        ("spectral estimates", c8),
        ("oracle equivalence", c9),
        ("structural property suite", c10),
        ("empirical component claims", c11),
    ];
    let mut ctx = Ctx { transfers: HashMap::new() };
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = f(&mut ctx);
        let mark = if o.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} {name} ({:.1}s): {}", i + 1, start.elapsed().as_secs_f64(), o.detail);
        failed += usize::from(!o.passed);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
