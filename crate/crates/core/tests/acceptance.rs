//! Acceptance criteria 1-10. Runs each check in sequence, prints one
//! PASS/FAIL line per criterion and exits non-zero if any failed.

mod common;

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use common::*;
use nplab::construct::{
    edge_count_bound, extend_with_pendants, label_cycle_standard, label_gp, label_grid,
    label_grid3, label_reduced_lobster, label_union_of_stars,
};
use nplab::corpus::graphs_of_order;
use nplab::graph::{generators, LobsterSpec};
use nplab::labeling::{
    even_set_obstruction, npl_iff_prime_2regular, unique_neighborhood_graph,
    DEFAULT_OBSTRUCTION_CAP,
};
use nplab::numtheory::{coprime_bijection, pillai_select, Interval};
use nplab::randomgraphs::{experiment_npl_rate, sample_gnp, Family};
use nplab::search::{
    find_chord_4k, find_hamilton_cycle, find_odd_chord, scan_graph6_str, search_npl,
    search_prime_labeling, ScanConfig, ScanMode,
};
use nplab::{parse_graph6, write_graph6, Graph, SearchBudget, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(started: Instant, limit: Duration) -> Result<(), String> {
    let spent = started.elapsed();
    if spent > limit {
        Err(format!("took {spent:.1?}, limit {limit:?}"))
    } else {
        Ok(())
    }
}

fn criterion_1() -> Check {
    let t = Instant::now();
    let budget = SearchBudget::unlimited();
    for n in 3..=500 {
        let g = generators::cycle(n).unwrap();
        let f = label_cycle_standard(n).map_err(|e| e.to_string())?;
        let ok = npl_holds(&g, f.as_slice());
        ensure!(
            ok == (n % 4 != 2),
            "C{n}: standard labeling verifies = {ok}"
        );
        if n % 4 == 2 && n <= 18 {
            let cert =
                even_set_obstruction(&g, DEFAULT_OBSTRUCTION_CAP).map_err(|e| e.to_string())?;
            ensure!(cert.is_some_and(|c| c.is_not_npl()), "C{n}: no obstruction");
        }
    }
    for n in [6, 10] {
        let cert = search_npl(&generators::cycle(n).unwrap(), &budget);
        ensure!(
            cert.reason().tag() == "SearchExhausted",
            "C{n}: search gave {}",
            cert.reason().tag()
        );
    }
    within(t, Duration::from_secs(10))?;
    Ok(format!("C3..C500 checked in {:.2?}", t.elapsed()))
}

fn criterion_2() -> Check {
    let t = Instant::now();
    let budget = SearchBudget::unlimited();
    let mut count = 0;
    let mut routes: BTreeMap<&'static str, usize> = BTreeMap::new();
    for n in 3..=26 {
        for k in 1..=n / 2 {
            let g = generators::generalized_petersen(n, k).unwrap();
            let l = label_gp(n, k, &budget).map_err(|e| format!("GP({n},{k}): {e}"))?;
            ensure!(l.graph == g, "GP({n},{k}): wrong graph");
            let f = l
                .certificate
                .labeling()
                .ok_or(format!("GP({n},{k}): no labeling"))?;
            ensure!(npl_holds(&g, f.as_slice()), "GP({n},{k}): labeling fails");
            *routes.entry(l.certificate.reason().tag()).or_default() += 1;
            count += 1;
        }
    }
    for (n, k) in [(8, 4), (12, 6), (16, 8), (20, 10), (24, 12)] {
        let l = label_gp(n, k, &budget).unwrap();
        ensure!(
            l.certificate.reason().tag() == "ExplicitFormula",
            "GP({n},{k}) not by formula"
        );
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!(
        "{count} graphs in {:.2?}, routes {routes:?}",
        t.elapsed()
    ))
}

fn criterion_3() -> Check {
    let t = Instant::now();
    let mut routes: BTreeMap<&'static str, usize> = BTreeMap::new();
    for m in 1..=10 {
        for n in 1..=10 {
            let l = label_grid(m, n).map_err(|e| format!("P{m}xP{n}: {e}"))?;
            ensure!(
                l.graph == generators::grid(&[m, n]).unwrap(),
                "P{m}xP{n}: wrong graph"
            );
            let f = l
                .certificate
                .labeling()
                .ok_or(format!("P{m}xP{n}: no labeling"))?;
            ensure!(
                npl_holds(&l.graph, f.as_slice()),
                "P{m}xP{n}: labeling fails"
            );
            *routes.entry(l.certificate.reason().tag()).or_default() += 1;
        }
    }
    ensure!(
        label_grid(5, 7).unwrap().certificate.reason().tag() == "CircumferenceNMinus1",
        "(5,7) route"
    );
    ensure!(
        label_grid(3, 6).unwrap().certificate.reason().tag() == "Chord4k",
        "(3,6) route"
    );
    let budget = SearchBudget::unlimited();
    let mut grids3 = 0;
    for a in 2..=4 {
        for b in 2..=4 {
            for c in 2..=4 {
                if a * b * c % 4 != 0 {
                    continue;
                }
                let l = label_grid3(a, b, c, &budget).map_err(|e| format!("{a}x{b}x{c}: {e}"))?;
                let f = l.certificate.labeling().ok_or("no labeling")?;
                ensure!(
                    npl_holds(&l.graph, f.as_slice()),
                    "{a}x{b}x{c}: labeling fails"
                );
                grids3 += 1;
            }
        }
    }
    within(t, Duration::from_secs(120))?;
    Ok(format!(
        "100 grids {routes:?}, {grids3} 3-d grids, {:.2?}",
        t.elapsed()
    ))
}

fn criterion_4() -> Check {
    let t = Instant::now();
    let config = ScanConfig {
        mode: ScanMode::Exact,
        ..ScanConfig::default()
    };
    let mut catalog: Vec<Graph> = Vec::new();
    let mut total = 0;
    for n in 2..=8 {
        let report =
            scan_graph6_str(graphs_of_order(n).unwrap(), &config).map_err(|e| e.to_string())?;
        ensure!(
            report.summary.is_complete(),
            "order {n}: {:?}",
            report.summary
        );
        total += report.summary.total;
        for r in &report.records {
            if r.verdict == Some(Verdict::NotNpl) {
                ensure!(
                    r.certificate == Some("SearchExhausted"),
                    "{}: {:?}",
                    r.g6,
                    r.certificate
                );
                catalog.push(parse_graph6(&r.g6).unwrap());
            }
        }
    }
    let types: Vec<Option<Vec<usize>>> = catalog.iter().map(cycle_type).collect();
    for n in 3..=8 {
        for parts in cycle_partitions(n) {
            let listed = types.contains(&Some(parts.clone()));
            ensure!(
                listed == union_predicted_not_npl(&parts),
                "union {parts:?}: listed = {listed}"
            );
        }
    }
    for want in [vec![6], vec![3, 3], vec![3, 5]] {
        ensure!(types.contains(&Some(want.clone())), "missing {want:?}");
    }
    let budget = SearchBudget::unlimited();
    for g in &catalog {
        let n = g.order();
        if let Some(c) = find_hamilton_cycle(g, &budget).into_found() {
            ensure!(
                g.edge_count() <= edge_count_bound(n),
                "{} exceeds the edge bound",
                write_graph6(g)
            );
            ensure!(n % 4 == 2, "{} Hamiltonian of order {n}", write_graph6(g));
            ensure!(
                find_chord_4k(g, &c).is_none() && find_odd_chord(g, &c).is_none(),
                "{} has a usable chord",
                write_graph6(g)
            );
        }
    }
    let min_degree_ok = catalog.iter().all(|g| g.min_degree() <= 2);
    ensure!(
        min_degree_ok,
        "a non-NPL graph with minimum degree at least 3"
    );
    within(t, Duration::from_secs(900))?;
    let names: Vec<String> = catalog.iter().map(write_graph6).collect();
    Ok(format!(
        "{total} graphs, not-NPL {names:?}, {:.2?}",
        t.elapsed()
    ))
}

fn criterion_5() -> Check {
    let t = Instant::now();
    let budget = SearchBudget::unlimited();
    let mut checked = 0;
    for n in 1..=6 {
        let text = if n == 1 {
            "@\n"
        } else {
            graphs_of_order(n).unwrap()
        };
        for line in text.lines() {
            let g = parse_graph6(line).unwrap();
            let cert = search_npl(&g, &budget);
            ensure!(cert.is_conclusive(), "{line}: inconclusive");
            ensure!(
                cert.is_npl() == naive_is_npl(&g),
                "{line}: disagrees with enumeration"
            );
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let p = rng.random_range(0.15..0.85);
        let g = sample_gnp(7, p, rng.random()).unwrap();
        let cert = search_npl(&g, &budget);
        ensure!(cert.is_conclusive(), "{}: inconclusive", write_graph6(&g));
        ensure!(
            cert.is_npl() == naive_is_npl(&g),
            "{}: disagrees with enumeration",
            write_graph6(&g)
        );
        checked += 1;
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!("{checked} graphs agree, {:.2?}", t.elapsed()))
}

fn criterion_6() -> Check {
    let t = Instant::now();
    for n in 1..=150u64 {
        for start in [n + 1, 2 * n, 10_000] {
            let iv = Interval::new(start, n).unwrap();
            let f = coprime_bijection(n, &iv).map_err(|e| e.to_string())?;
            let mut image = f.clone();
            image.sort_unstable();
            ensure!(
                image == iv.members().collect::<Vec<_>>(),
                "N={n} start {start}: not onto"
            );
            ensure!(
                f.iter()
                    .enumerate()
                    .all(|(i, &y)| gcd(i + 1, y as usize) == 1),
                "N={n} start {start}: shares a factor"
            );
        }
    }
    for len in 1..=16 {
        for start in 1..=100_000 {
            let iv = Interval::new(start, len).unwrap();
            let x = pillai_select(&iv).ok_or(format!("no Pillai member in [{start}, +{len})"))?;
            ensure!(
                iv.members()
                    .all(|y| y == x || gcd(x as usize, y as usize) == 1),
                "bad pick {x}"
            );
        }
    }
    let oracle = first_pillai_failure(17, 100_000).ok_or("oracle found no failing run")? as u64;
    let ours = (1..=100_000).find(|&s| pillai_select(&Interval::new(s, 17).unwrap()).is_none());
    ensure!(
        ours == Some(oracle),
        "first failing length-17 start {ours:?}, oracle {oracle}"
    );
    within(t, Duration::from_secs(120))?;
    Ok(format!(
        "first failing length-17 start {oracle}, {:.2?}",
        t.elapsed()
    ))
}

fn criterion_7() -> Check {
    let t = Instant::now();
    let budget = SearchBudget::unlimited();
    let mut unions = 0;
    let mut not_npl = 0;
    for n in 3..=12 {
        for parts in cycle_partitions(n) {
            let cycles: Vec<Graph> = parts
                .iter()
                .map(|&p| generators::cycle(p).unwrap())
                .collect();
            let g = generators::union(&cycles).unwrap();
            let h = unique_neighborhood_graph(&g)
                .ok_or(format!("{parts:?}: no unique neighborhood graph"))?;
            let npl = search_npl(&g, &budget);
            let prime = search_prime_labeling(h.graph(), &budget);
            ensure!(
                npl.is_conclusive() && !prime.is_budget_exhausted(),
                "{parts:?}: undecided"
            );
            ensure!(
                npl.is_npl() == prime.found().is_some(),
                "{parts:?}: NPL(G) != prime(H)"
            );
            if let Some(f) = prime.found() {
                ensure!(
                    prime_holds(h.graph(), f.as_slice()),
                    "{parts:?}: bad prime labeling"
                );
            }
            let eq = npl_iff_prime_2regular(&g, &budget).map_err(|e| e.to_string())?;
            ensure!(
                eq.agrees() && eq.graph_npl == npl.is_npl(),
                "{parts:?}: library check disagrees"
            );
            not_npl += usize::from(!npl.is_npl());
            unions += 1;
        }
    }
    within(t, Duration::from_secs(300))?;
    Ok(format!(
        "{unions} unions, {not_npl} not NPL, {:.2?}",
        t.elapsed()
    ))
}

fn random_star_sizes(rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut order = 0;
    let mut big = false;
    loop {
        let s = if !big && rng.random_bool(0.2) {
            rng.random_range(16..=40)
        } else {
            rng.random_range(0..=15)
        };
        if order + s + 1 > 60 {
            return sizes;
        }
        big |= s > 15;
        order += s + 1;
        sizes.push(s);
    }
}

fn criterion_8() -> Check {
    let t = Instant::now();
    let known = label_union_of_stars(&[15, 8, 5, 4, 1]).map_err(|e| e.to_string())?;
    ensure!(
        prime_holds(&known.graph, known.labeling.as_slice()),
        "instance 15,8,5,4,1 fails"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..50 {
        let sizes = random_star_sizes(&mut rng);
        let r = label_union_of_stars(&sizes).map_err(|e| format!("{sizes:?}: {e}"))?;
        let stars: Vec<Graph> = sizes
            .iter()
            .map(|&s| generators::star(s).unwrap())
            .collect();
        ensure!(
            r.graph == generators::union(&stars).unwrap(),
            "{sizes:?}: wrong graph"
        );
        ensure!(r.graph.order() <= 60, "{sizes:?}: too large");
        ensure!(
            prime_holds(&r.graph, r.labeling.as_slice()),
            "{sizes:?}: not prime"
        );
    }
    Ok(format!(
        "15,8,5,4,1 + 50 random unions, {:.2?}",
        t.elapsed()
    ))
}

fn criterion_9() -> Check {
    let t = Instant::now();
    let known = LobsterSpec::reduced(&[17, 9, 6, 5]).unwrap();
    let l = label_reduced_lobster(&known).map_err(|e| e.to_string())?;
    ensure!(
        npl_holds(&l.graph, l.certificate.labeling().unwrap().as_slice()),
        "instance 15,8,5,4,1 fails"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut lobsters = Vec::new();
    while lobsters.len() < 50 {
        let spine = rng.random_range(1..=8);
        let mut degrees: Vec<usize> = (0..spine).map(|_| rng.random_range(3..=12)).collect();
        if rng.random_bool(0.3) {
            degrees[0] = rng.random_range(17..=30);
        }
        let spec = LobsterSpec::reduced(&degrees).unwrap();
        if spec.vertex_count() > 80 {
            continue;
        }
        let l = label_reduced_lobster(&spec).map_err(|e| format!("{degrees:?}: {e}"))?;
        ensure!(
            npl_holds(&l.graph, l.certificate.labeling().unwrap().as_slice()),
            "{degrees:?}: labeling fails"
        );
        lobsters.push(l);
    }
    for l in lobsters.iter().take(50) {
        let hosts: Vec<usize> = (0..l.graph.order())
            .filter(|&v| l.graph.degree(v) > 2)
            .collect();
        let attach: Vec<(usize, usize)> = (0..rng.random_range(1..=4))
            .map(|_| {
                (
                    hosts[rng.random_range(0..hosts.len())],
                    rng.random_range(1..=3),
                )
            })
            .collect();
        let (g, cert) =
            extend_with_pendants(&l.graph, &l.certificate, &attach).map_err(|e| e.to_string())?;
        ensure!(
            npl_holds(&g, cert.labeling().unwrap().as_slice()),
            "extension {attach:?} fails"
        );
    }
    Ok(format!(
        "17,9,6,5 + 50 lobsters + 50 extensions, {:.2?}",
        t.elapsed()
    ))
}

fn criterion_10() -> Check {
    let t = Instant::now();
    let budget = SearchBudget::unlimited();
    let mut fractions = Vec::new();
    for n in [12, 16, 20, 24] {
        let family = Family::Gnd { n, d: 3 };
        let report =
            experiment_npl_rate(family, 100, 2024, &budget, false).map_err(|e| e.to_string())?;
        ensure!(
            report.unknown == 0,
            "gnd({n},3): {} unknown",
            report.unknown
        );
        ensure!(
            report.npl + report.not_npl == 100,
            "gnd({n},3): counts do not sum"
        );
        for r in &report.records {
            if r.verdict == Verdict::NotNpl {
                ensure!(
                    matches!(
                        r.certificate,
                        "SearchExhausted" | "EvenSetObstruction" | "OddCycleUnion"
                    ),
                    "gnd({n},3) trial {}: {}",
                    r.trial,
                    r.certificate
                );
            }
        }
        let again = experiment_npl_rate(family, 100, 2024, &budget, false).unwrap();
        ensure!(
            again.to_json() == report.to_json(),
            "gnd({n},3): not reproducible"
        );
        fractions.push(format!(
            "n={n}: {:.2} {:?}",
            report.npl_fraction, report.by_certificate
        ));
    }
    within(t, Duration::from_secs(600))?;
    Ok(format!("{} ({:.2?})", fractions.join("; "), t.elapsed()))
}

fn main() {
    // libtest flags such as --nocapture or a name filter are accepted and ignored.
    let criteria: [Criterion; 10] = [
        ("cycle law", criterion_1),
        ("generalized Petersen", criterion_2),
        ("grids", criterion_3),
        ("small-order classification", criterion_4),
        ("oracle equivalence", criterion_5),
        ("number theory", criterion_6),
        ("neighborhood-graph equivalence", criterion_7),
        ("union of stars", criterion_8),
        ("lobsters", criterion_9),
        ("random regular graphs", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
