//! Runs the acceptance criteria in order and prints one line per criterion.
//! Exits non-zero when a criterion fails that is not listed in `KNOWN_GAPS`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use condensa::ambient::{Path, TwoCell};
use condensa::morita::{
    center_rank, eilenberg_watts_roundtrip, find_morita_witness, identity_bimodule, indecomposable,
};
use condensa::reltensor::{alpha_cell, build_condensation_monad, l_cell, r_cell, relative_tensor, verify_monad};
use condensa::scalars::Field;
use condensa::separability::is_separable;
use condensa::structures::{
    catalog, check_algebra, check_bimodule, check_left_module, check_module, load_fusion_algebra, mutations,
    AlgebraObject, Bimodule, FusionData, LeftModule, RightModule,
};
use condensa::{Error, FieldElement};

/// Criteria whose literal statement cannot hold; each still prints FAIL.
/// 1: rescaling ν(g, g) of a rank-one module over Z/2 gives another valid
/// module, so no sound checker can flag that mutation.
const KNOWN_GAPS: &[u32] = &[1];

struct Line {
    id: u32,
    title: &'static str,
    passed: bool,
    detail: String,
}

fn load(data: &FusionData) -> Arc<AlgebraObject> {
    Arc::new(load_fusion_algebra(data).unwrap())
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let t = start.elapsed();
    (t < limit, format!("{:.2}s of {}s", t.as_secs_f64(), limit.as_secs()))
}

// ---------------------------------------------------------------- oracles

/// A rank-one action of an untwisted pointed category, read as a table
/// `t(a, b)`, is valid exactly when `t` is a 2-cocycle with `t(a, 1) =
/// t(1, a) = r` for the unit value `r`.
fn rank_one_action_is_valid(
    order: u32,
    mult: &dyn Fn(u32, u32) -> u32,
    t: &HashMap<(u32, u32), FieldElement>,
    r: &FieldElement,
) -> bool {
    if t.values().any(FieldElement::is_zero) || r.is_zero() {
        return false;
    }
    let g = 0..order;
    g.clone().all(|a| &t[&(a, 0)] == r && &t[&(0, a)] == r)
        && g.clone().all(|a| {
            g.clone()
                .all(|b| g.clone().all(|c| &t[&(b, c)] * &t[&(a, mult(b, c))] == &t[&(mult(a, b), c)] * &t[&(a, b)]))
        })
}

/// Conjugacy classes of a group from its multiplication table; over a
/// splitting field of characteristic zero this is the number of simple
/// blocks of the group algebra.
fn conjugacy_classes(table: &[Vec<usize>]) -> usize {
    let n = table.len();
    let inv = |g: usize| (0..n).find(|&h| table[g][h] == 0).unwrap();
    let mut seen = vec![false; n];
    let mut classes = 0;
    for x in 0..n {
        if !seen[x] {
            classes += 1;
            for g in 0..n {
                seen[table[table[g][x]][inv(g)]] = true;
            }
        }
    }
    classes
}

/// Twist exponents of every simple half-braiding on Vec_G^ω, G abelian, with
/// values written as exponents of a primitive `n`-th root of unity.
fn half_braiding_twists(
    order: usize,
    add: &dyn Fn(usize, usize) -> usize,
    omega: &dyn Fn(usize, usize, usize) -> i64,
    n: i64,
) -> Vec<i64> {
    let mut out = Vec::new();
    for g in 0..order {
        for code in 0..(n as usize).pow(order as u32) {
            let c: Vec<i64> = (0..order).map(|h| ((code / (n as usize).pow(h as u32)) % n as usize) as i64).collect();
            let hexagon = (0..order).all(|h| {
                (0..order).all(|k| {
                    let rhs = c[h] + c[k] - omega(g, h, k) + omega(h, g, k) - omega(h, k, g);
                    (c[add(h, k)] - rhs).rem_euclid(n) == 0
                })
            });
            if hexagon {
                out.push(c[g]);
            }
        }
    }
    out
}

fn multiset(xs: impl IntoIterator<Item = String>) -> BTreeMap<String, usize> {
    let mut m = BTreeMap::new();
    for x in xs {
        *m.entry(x).or_insert(0) += 1;
    }
    m
}

fn matmul(a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter().map(|row| (0..cols).map(|j| row.iter().zip(b).map(|(x, r)| x * r[j]).sum()).collect()).collect()
}

/// `P ⊗ I_n` and `I_n ⊗ P`.
fn kron(p: &[Vec<u32>], n: usize, identity_first: bool) -> Vec<Vec<u32>> {
    let (r, c) = (p.len(), p.first().map_or(0, Vec::len));
    let mut out = vec![vec![0; c * n]; r * n];
    for i in 0..r {
        for j in 0..c {
            for k in 0..n {
                if identity_first {
                    out[k * r + i][k * c + j] = p[i][j];
                } else {
                    out[i * n + k][j * n + k] = p[i][j];
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------- catalog

struct Modules {
    alg: Arc<AlgebraObject>,
    right: Vec<RightModule>,
    left: Vec<LeftModule>,
}

/// Every catalog algebra with the modules the catalog defines over it.
fn catalog_modules() -> Vec<Modules> {
    catalog::all_fusion()
        .iter()
        .map(|data| {
            let alg = load(data);
            let mut right = vec![RightModule::regular(&alg)];
            let mut left = vec![LeftModule::regular(&alg)];
            let vec_ok = catalog::vec_right_module(&alg).is_ok_and(|m| check_module(&m).passed());
            if vec_ok && alg.rank() > 1 {
                right.push(catalog::vec_right_module(&alg).unwrap());
                left.push(catalog::vec_left_module(&alg).unwrap());
                right.push(catalog::group_algebra_right_module(&alg).unwrap());
                left.push(catalog::group_algebra_left_module(&alg).unwrap());
            }
            Modules { alg, right, left }
        })
        .collect()
}

fn matrices() -> (Arc<AlgebraObject>, Arc<AlgebraObject>, Bimodule, Bimodule) {
    let q = Field::rationals();
    let (v, m) = (load(&catalog::vec(&q)), load(&catalog::mat2(&q)));
    let col = catalog::column_bimodule(&m, &v).unwrap();
    let row = catalog::row_bimodule(&v, &m).unwrap();
    (v, m, col, row)
}

fn catalog_bimodules() -> Vec<Bimodule> {
    let (_, _, col, row) = matrices();
    let mut out: Vec<Bimodule> = catalog::all_fusion().iter().map(|d| identity_bimodule(&load(d))).collect();
    out.push(col);
    out.push(row);
    out
}

/// Pointed untwisted catalog algebras with their group law, for the rank-one oracle.
fn group_law(name: &str) -> Option<(u32, fn(u32, u32) -> u32)> {
    match name {
        "VecZ2" => Some((2, |a, b| a ^ b)),
        "VecZ3" => Some((3, |a, b| (a + b) % 3)),
        "VecZ2xZ2" => Some((4, |a, b| a ^ b)),
        _ => None,
    }
}

// ---------------------------------------------------------------- criteria

fn axiom_suite() -> Line {
    let start = Instant::now();
    let mut all_pass = true;
    let (mut total, mut undetected, mut oracle_valid, mut disagreements) = (0, 0, 0, 0);
    let mut tally = |detected: bool, valid: Option<bool>| {
        total += 1;
        if !detected {
            undetected += 1;
        }
        match valid {
            Some(v) => {
                oracle_valid += v as usize;
                disagreements += (v == detected) as usize;
            }
            None => disagreements += (!detected) as usize,
        }
    };
    for data in catalog::all_fusion() {
        let alg = condensa::structures::build_fusion_algebra(&data).unwrap();
        all_pass &= check_algebra(&alg).passed();
        for which in 0..3 {
            let cell = [&alg.lambda, &alg.mu, &alg.rho][which];
            for m in mutations(cell) {
                let mut bad = alg.clone();
                *[&mut bad.lambda, &mut bad.mu, &mut bad.rho][which] = m.cell;
                tally(!check_algebra(&bad).passed(), None);
            }
        }
    }
    for ms in catalog_modules() {
        let law = group_law(&ms.alg.name);
        let unit_value = |c: &TwoCell| c.entries().next().unwrap().2.clone();
        for md in &ms.right {
            all_pass &= check_module(md).passed();
            let rank_one = md.carrier.rank() == 1;
            let table = |c: &TwoCell| c.entries().map(|(s, _, v)| ((s[1], s[2]), v.clone())).collect::<HashMap<_, _>>();
            for (is_nu, cell) in [(true, &md.nu), (false, &md.rho)] {
                for m in mutations(cell) {
                    let mut bad = md.clone();
                    if is_nu {
                        bad.nu = m.cell
                    } else {
                        bad.rho = m.cell
                    }
                    let valid = law
                        .filter(|_| rank_one)
                        .map(|(o, f)| rank_one_action_is_valid(o, &f, &table(&bad.nu), &unit_value(&bad.rho)));
                    tally(!check_module(&bad).passed(), valid);
                }
            }
        }
        for md in &ms.left {
            all_pass &= check_left_module(md).passed();
            let rank_one = md.carrier.rank() == 1;
            let table = |c: &TwoCell| c.entries().map(|(s, _, v)| ((s[0], s[1]), v.clone())).collect::<HashMap<_, _>>();
            for (is_kappa, cell) in [(true, &md.kappa), (false, &md.lambda)] {
                for m in mutations(cell) {
                    let mut bad = md.clone();
                    if is_kappa {
                        bad.kappa = m.cell
                    } else {
                        bad.lambda = m.cell
                    }
                    let valid = law
                        .filter(|_| rank_one)
                        .map(|(o, f)| rank_one_action_is_valid(o, &f, &table(&bad.kappa), &unit_value(&bad.lambda)));
                    tally(!check_left_module(&bad).passed(), valid);
                }
            }
        }
    }
    for b in catalog_bimodules() {
        all_pass &= check_bimodule(&b).passed();
        for m in mutations(&b.beta) {
            let mut bad = b.clone();
            bad.beta = m.cell;
            tally(!check_bimodule(&bad).passed(), None);
        }
    }
    let (fast, time) = within(Duration::from_secs(10), start);
    Line {
        id: 1,
        title: "axiom suite",
        passed: all_pass && undetected == 0 && fast,
        detail: format!(
            "catalog passes: {all_pass}; {undetected} of {total} single-entry mutations undetected, \
             {oracle_valid} judged valid by the cocycle oracle, {disagreements} checker/oracle disagreements; {time}"
        ),
    }
}

fn separability_dichotomy() -> Line {
    let start = Instant::now();
    let q = Field::rationals();
    let cases = [
        (catalog::vec_z2_graded(&q), true),
        (catalog::vec_z2_graded(&Field::prime(2)), false),
        (catalog::vec_z3_graded(&q), true),
        (catalog::vec_z3_graded(&Field::prime(3)), false),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (data, expect) in cases {
        let outcome = is_separable(&load(&data));
        let got = match &outcome {
            Ok(_) => "separable",
            Err(Error::Infeasible(_)) => "Infeasible",
            Err(_) => "error",
        };
        ok &= got == if expect { "separable" } else { "Infeasible" };
        parts.push(format!("{} over {}: {got}", data.name, data.field));
    }
    let (fast, time) = within(Duration::from_secs(5), start);
    Line { id: 2, title: "separability dichotomy", passed: ok && fast, detail: format!("{}; {time}", parts.join(", ")) }
}

fn monad_replay() -> Line {
    let start = Instant::now();
    let (mut total, mut passed) = (0, 0);
    let mut first_failure = None;
    let mut run = |alg: &Arc<AlgebraObject>, r: &RightModule, l: &LeftModule| {
        total += 1;
        let sep = is_separable(alg).unwrap();
        let ok = build_condensation_monad(alg, r, l, &sep).map(|m| verify_monad(&alg.field, &m));
        match ok {
            Ok(rep) if rep.passed() => passed += 1,
            other => {
                first_failure.get_or_insert(format!(
                    "{} {} {}: {:?}",
                    alg.name,
                    r.name,
                    l.name,
                    other.map(|r| r.to_string())
                ));
            }
        }
    };
    for ms in catalog_modules() {
        for r in &ms.right {
            for l in &ms.left {
                run(&ms.alg, r, l);
            }
        }
    }
    let (v, m, col, row) = matrices();
    run(&v, &col.right, &row.left);
    run(&m, &row.right, &col.left);
    let (fast, time) = within(Duration::from_secs(60), start);
    Line {
        id: 3,
        title: "condensation monad equations",
        passed: passed == total && fast,
        detail: format!(
            "{passed}/{total} triples pass all five equations{}; {time}",
            first_failure.map(|f| format!(", first failure {f}")).unwrap_or_default()
        ),
    }
}

fn unitors() -> Line {
    let mut ok = true;
    let mut failures = Vec::new();
    for data in catalog::all_fusion() {
        let alg = load(&data);
        let sep = is_separable(&alg).unwrap();
        let id = Bimodule::identity(&alg);
        let (Ok(u), Ok(r)) = (l_cell(&id, &sep), r_cell(&id, &sep)) else {
            ok = false;
            failures.push(data.name.clone());
            continue;
        };
        let t = &u.tensor.bimodule;
        let p = Path::generator(&u.map).dims();
        let ra = alg.rank();
        let dims = |g| Path::generator(g).dims();
        let good = u.verified()
            && r.verified()
            && t.carrier().rank() == ra
            && matmul(&p, &dims(&t.right.n)) == matmul(&dims(&id.right.n), &kron(&p, ra, false))
            && matmul(&p, &dims(&t.left.l)) == matmul(&dims(&id.left.l), &kron(&p, ra, true));
        if !good {
            ok = false;
            failures.push(data.name.clone());
        }
    }
    Line {
        id: 4,
        title: "unitor A□_A A ≃ A",
        passed: ok,
        detail: if ok {
            "all catalog algebras: equal ranks, intertwined action dims, verified adjoint equivalences".into()
        } else {
            format!("failed for {}", failures.join(", "))
        },
    }
}

fn relative_tensor_oracle() -> Line {
    let q = Field::rationals();
    let z2 = vec![vec![0, 1], vec![1, 0]];
    let z3: Vec<Vec<usize>> = (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect();
    let v4: Vec<Vec<usize>> = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
    let cases = [(catalog::vec_z2(&q), z2), (catalog::vec_z3(&Field::cyclotomic(3)), z3), (catalog::vec_z2xz2(&q), v4)];
    let mut ok = true;
    let mut parts = Vec::new();
    for (data, table) in cases {
        let alg = load(&data);
        let sep = is_separable(&alg).unwrap();
        let r = catalog::vec_right_module(&alg).unwrap();
        let l = catalog::vec_left_module(&alg).unwrap();
        let rank = relative_tensor(&alg, &r, &l, &sep, "Vec□Vec").map(|t| t.object().rank());
        let expected = conjugacy_classes(&table);
        ok &= rank.as_ref().ok() == Some(&expected);
        parts.push(format!(
            "{}: {} vs {expected}",
            data.name,
            rank.map(|r| r.to_string()).unwrap_or_else(|e| e.to_string())
        ));
    }
    Line { id: 5, title: "Vec □_{Vec_G} Vec = #irreps", passed: ok, detail: parts.join(", ") }
}

fn center_oracle() -> Line {
    let k = Field::cyclotomic(4);
    let z2 = |a: usize, b: usize| (a + b) % 2;
    let trivial = |_: usize, _: usize, _: usize| 0i64;
    let semion = |a: usize, b: usize, c: usize| if a == 1 && b == 1 && c == 1 { 2 } else { 0 };
    let engine = |data: FusionData| -> (usize, BTreeMap<String, usize>) {
        let c = center_rank(&load(&data)).unwrap();
        let twists = c.blocks.iter().map(|b| b.twist.as_ref().map(ToString::to_string).unwrap_or_default());
        (c.rank, multiset(twists))
    };
    let oracle = |exps: Vec<i64>| -> (usize, BTreeMap<String, usize>) {
        (exps.len(), multiset(exps.iter().map(|&e| k.zeta_pow(e).unwrap().to_string())))
    };
    let vec_rank = center_rank(&load(&catalog::vec(&Field::rationals()))).unwrap().rank;
    let (r2, t2) = engine(catalog::vec_z2(&k));
    let (o2, ot2) = oracle(half_braiding_twists(2, &z2, &trivial, 4));
    let (rw, tw) = engine(catalog::vec_z2_omega(&k));
    let (ow, otw) = oracle(half_braiding_twists(2, &z2, &semion, 4));
    let ok = vec_rank == 1 && r2 == 4 && o2 == 4 && t2 == ot2 && rw == 4 && ow == 4 && tw == otw && t2 != tw;
    Line {
        id: 6,
        title: "center ranks",
        passed: ok,
        detail: format!(
            "Vec {vec_rank}; VecZ2 {r2} (oracle {o2}), twists {t2:?}; VecZ2omega {rw} (oracle {ow}), twists {tw:?}"
        ),
    }
}

fn associators() -> Line {
    let mut triples: Vec<(Bimodule, Bimodule, Bimodule)> = Vec::new();
    for data in catalog::all_fusion() {
        let id = identity_bimodule(&load(&data));
        triples.push((id.clone(), id.clone(), id));
    }
    let (v, m, col, row) = matrices();
    triples.push((col.clone(), row.clone(), col.clone()));
    triples.push((row.clone(), col.clone(), row.clone()));
    triples.push((identity_bimodule(&m), col.clone(), identity_bimodule(&v)));
    let total = triples.len();
    let mut failures = Vec::new();
    for (a, b, c) in &triples {
        let sep_b = is_separable(&a.right.algebra).unwrap();
        let sep_c = is_separable(&b.right.algebra).unwrap();
        let ok = alpha_cell(a, b, c, &sep_b, &sep_c).is_ok_and(|x| x.verified());
        if !ok {
            failures.push(format!("({}, {}, {})", a.name, b.name, c.name));
        }
    }
    Line {
        id: 7,
        title: "associator α",
        passed: failures.is_empty(),
        detail: format!(
            "{}/{total} composable triples verified{}",
            total - failures.len(),
            if failures.is_empty() { String::new() } else { format!("; failing {}", failures.join(" ")) }
        ),
    }
}

fn indecomposability() -> Line {
    let q = Field::rationals();
    let cases = [
        (catalog::vec(&q), 1),
        (catalog::vec_z2(&q), 1),
        (catalog::vec_z3(&Field::cyclotomic(3)), 1),
        (catalog::fibonacci(), 1),
        (catalog::vec_x_vec(&q), 2),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (data, expected) in cases {
        let got = indecomposable(&load(&data)).unwrap();
        ok &= got.dim == expected && got.indecomposable == (expected == 1);
        parts.push(format!("{} {}", data.name, got.dim));
    }
    Line { id: 8, title: "indecomposability", passed: ok, detail: parts.join(", ") }
}

fn eilenberg_watts() -> Line {
    let bimodules = catalog_bimodules();
    let failing: Vec<String> =
        bimodules.iter().filter(|p| !eilenberg_watts_roundtrip(p).passed()).map(|p| p.name.clone()).collect();
    Line {
        id: 9,
        title: "Eilenberg-Watts roundtrip",
        passed: failing.is_empty(),
        detail: format!("{}/{} bimodules", bimodules.len() - failing.len(), bimodules.len()),
    }
}

fn morita_certificate() -> Line {
    let (v, m, col, row) = matrices();
    let cert = find_morita_witness(&col, &row);
    let certified = cert.as_ref().is_ok_and(|c| c.report.passed() && c.reverify());
    let (cm, cv) = (center_rank(&m).unwrap().rank, center_rank(&v).unwrap().rank);
    let (im, iv) = (indecomposable(&m).unwrap(), indecomposable(&v).unwrap());
    Line {
        id: 10,
        title: "Morita certificate Mat2 ~ Vec",
        passed: certified && cm == cv && im == iv,
        detail: format!(
            "certified and re-verified: {certified}; center ranks {cm}/{cv}; indecomposable dims {}/{}",
            im.dim, iv.dim
        ),
    }
}

fn separability_vs_tube() -> Line {
    let q = Field::rationals();
    let cases = [
        catalog::vec_z2(&q),
        catalog::vec_z2(&Field::prime(2)),
        catalog::vec_z2(&Field::prime(3)),
        catalog::vec_z3(&Field::cyclotomic(3)),
        catalog::vec_z3(&Field::prime(3)),
        catalog::vec_z3(&Field::prime(7)),
        catalog::vec_z2xz2(&q),
        catalog::vec_z2xz2(&Field::prime(2)),
        catalog::vec_z2_omega(&Field::cyclotomic(4)),
        catalog::fibonacci(),
        catalog::vec_x_vec(&q),
        catalog::mat2(&q),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for data in cases {
        let alg = load(&data);
        let sep = is_separable(&alg).is_ok();
        let tube = match center_rank(&alg) {
            Ok(_) => Some(true),
            Err(Error::NotSemisimple(_)) => Some(false),
            Err(_) => None,
        };
        ok &= tube == Some(sep);
        parts.push(format!(
            "{}/{}: {}",
            data.name,
            data.field,
            if tube == Some(sep) {
                if sep {
                    "both yes"
                } else {
                    "both no"
                }
            } else {
                "disagree"
            }
        ));
    }
    Line { id: 11, title: "separability vs tube semisimplicity", passed: ok, detail: parts.join(", ") }
}

fn main() {
    let criteria: [fn() -> Line; 11] = [
        axiom_suite,
        separability_dichotomy,
        monad_replay,
        unitors,
        relative_tensor_oracle,
        center_oracle,
        associators,
        indecomposability,
        eilenberg_watts,
        morita_certificate,
        separability_vs_tube,
    ];
    let mut unexpected = Vec::new();
    for run in criteria {
        let line = run();
        println!(
            "criterion {:>2} {}: {} ({})",
            line.id,
            if line.passed { "PASS" } else { "FAIL" },
            line.title,
            line.detail
        );
        if !line.passed && !KNOWN_GAPS.contains(&line.id) {
            unexpected.push(line.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
