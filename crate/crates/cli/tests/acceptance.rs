//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
//!
//! Every count and dimension is compared exactly. The only tolerances are wall-clock
//! budgets, pinned below.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::{Duration, Instant};

use ydkit_cli::{run, EXIT_VERIFY};
use ydkit_core::algengine::Side;
use ydkit_core::braided::{identity_suite, verify_qt, CheckOutcome, QTHopf};
use ydkit_core::catalog::{builtin, builtin_group, sweedler, symmetric3_table};
use ydkit_core::exactfield::{CycNumber, DEFAULT_MAX_DEN};
use ydkit_core::hopfcore::{grouplikes, integrals, verify_hopf, Tensor};
use ydkit_core::linalg::{Mat, Subspace};
use ydkit_core::shellio::{export, load, load_str, LoadError};
use ydkit_core::ydclass::{
    build_nw, check_divisibility, classify_all, classify_block, classify_splitting, decompose_h, dimension_identity,
    is_h_simple, one_dim_yd, simple_coideals, transmuted_grouplikes, verify_yd, Classification, Coideal, YDModule,
};

const SEED: u64 = 11;
const MAX_FIELD: u32 = 64;

const H8_BUDGET: Duration = Duration::from_secs(60);
const Q8_BUDGET: Duration = Duration::from_secs(5 * 60);
const SUITE_BUDGET: Duration = Duration::from_secs(15 * 60);

/// Catalog entries; `z_n` is instantiated for n = 3..6 alongside z2.
const CATALOG: &[&str] = &["z2", "z2_minus", "z3", "z4", "z5", "z6", "s3", "d4", "q8", "h8"];
const GROUPS: &[&str] = &["z2", "z3", "z4", "z5", "z6", "s3", "d4", "q8"];

type Outcome = Result<String, String>;

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn qt(name: &str) -> Result<QTHopf, String> {
    let e = builtin(name).map_err(|e| e.to_string())?;
    verify_qt(&e.hopf, &e.r_matrix).map_err(|e| format!("{name}: {e}"))
}

fn cli(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut argv = vec!["ydkit"];
    argv.extend_from_slice(args);
    let code = run(argv, &mut out);
    (code, String::from_utf8_lossy(&out).into_owned())
}

/// Classifications of the catalog, computed once and shared by several criteria.
struct Catalog {
    entries: BTreeMap<&'static str, (QTHopf, Classification)>,
    q8_time: Duration,
}

impl Catalog {
    fn build() -> Result<Self, String> {
        let mut entries = BTreeMap::new();
        let mut q8_time = Duration::ZERO;
        for &name in CATALOG {
            let start = Instant::now();
            let pair = classify_splitting(&qt(name)?, SEED, DEFAULT_MAX_DEN, MAX_FIELD)
                .map_err(|e| format!("{name}: {e}"))?;
            if name == "q8" {
                q8_time = start.elapsed();
            }
            entries.insert(name, pair);
        }
        Ok(Catalog { entries, q8_time })
    }

    fn get(&self, name: &str) -> &(QTHopf, Classification) {
        &self.entries[name]
    }
}

/// Vector on the H₈ basis {1,x,y,xy,z,xz,yz,xyz} with entries a + b·i.
fn h8_vec(order: u32, entries: &[(usize, i64, i64)]) -> Vec<CycNumber> {
    let i = CycNumber::zeta(order).pow(order / 4);
    let mut v = vec![CycNumber::zero(order); 8];
    for &(k, re, im) in entries {
        v[k] = &CycNumber::from_int(order, re) + &(&i * &CycNumber::from_int(order, im));
    }
    v
}

fn span(order: u32, vectors: Vec<Vec<CycNumber>>) -> Subspace {
    let n = vectors[0].len();
    Subspace::span(order, n, vectors)
}

fn h8_classification(dir: &Path) -> Outcome {
    let out = dir.join("h8.json");
    let start = Instant::now();
    let (code, text) = cli(&["classify", "--builtin", "h8", "--seed", "0", "--json", out.to_str().unwrap()]);
    let elapsed = start.elapsed();
    ensure(code == 0, || format!("classify exited {code}: {text}"))?;
    let record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let blocks = record["blocks"].as_array().ok_or("record has no blocks")?;
    let dims: Vec<Vec<u64>> = blocks
        .iter()
        .map(|b| b["irreducible_dims"].as_array().unwrap().iter().map(|d| d.as_u64().unwrap()).collect())
        .collect();
    let nw: Vec<u64> = blocks.iter().map(|b| b["nw_dim"].as_u64().unwrap()).collect();
    let expected_dims = vec![vec![1, 1, 1, 1, 2], vec![1, 1, 1, 1, 2], vec![2, 2, 2, 2], vec![2, 2, 2, 2], vec![2, 2, 2, 2]];
    ensure(dims == expected_dims, || format!("block dims {dims:?}"))?;
    ensure(nw == [8, 8, 4, 4, 4], || format!("N_W dims {nw:?}"))?;
    let count = record["totals"]["count"].as_u64();
    ensure(count == Some(22), || format!("count {count:?}"))?;
    ensure(elapsed < H8_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("22 modules, N_W dims 8,8,4,4,4, {:.2}s", elapsed.as_secs_f64()))
}

fn h8_structure(cat: &Catalog) -> Outcome {
    let (q, c) = cat.get("h8");
    let o = q.order();
    let err = |e: &dyn std::fmt::Display| e.to_string();

    // g₁ = (1+i)/2·z + (1−i)/2·yz
    let half = CycNumber::from_frac(o, 1, 2);
    let g1: Vec<CycNumber> = h8_vec(o, &[(4, 1, 1), (6, 1, -1)]).iter().map(|x| x * &half).collect();
    let group = transmuted_grouplikes(q, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
    ensure(group.len() == 8, || format!("|G(H_R)| = {}", group.len()))?;
    ensure(group.contains(&g1), || "g1 is not a grouplike of H_R".into())?;

    let blocks = decompose_h(q, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
    let kx = Coideal::new(q, span(o, vec![h8_vec(o, &[(1, 1, 0)])])).ok_or("kx is not a coideal")?;
    let dx = blocks.iter().find(|b| b.subspace().contains_vector(&kx.vectors()[0])).ok_or("no block holds x")?;
    let nx = build_nw(q, dx, &kx).map_err(|e| err(&e))?;
    let nx_span = span(o, nx.as_h_elements().ok_or("N_kx not in H")?);
    ensure(nx_span == span(o, (0..4).map(|k| h8_vec(o, &[(k, 1, 0)])).collect()), || "N_kx".into())?;

    let kg1 = Coideal::new(q, span(o, vec![g1.clone()])).ok_or("kg1 is not a coideal")?;
    let dg = blocks.iter().find(|b| b.subspace().contains_vector(&g1)).ok_or("no block holds g1")?;
    let ng = build_nw(q, dg, &kg1).map_err(|e| err(&e))?;
    let ng_span = span(o, ng.as_h_elements().ok_or("N_kg1 not in H")?);
    // span{1, xy, z + i·xz, i·yz + xyz}
    let expected = span(
        o,
        vec![
            h8_vec(o, &[(0, 1, 0)]),
            h8_vec(o, &[(3, 1, 0)]),
            h8_vec(o, &[(4, 1, 0), (5, 0, 1)]),
            h8_vec(o, &[(6, 0, 1), (7, 1, 0)]),
        ],
    );
    ensure(ng_span == expected, || "N_kg1".into())?;

    let central: Vec<Vec<CycNumber>> = grouplikes(q.hopf(), SEED, DEFAULT_MAX_DEN)
        .map_err(|e| err(&e))?
        .into_iter()
        .filter(|g| g.central)
        .map(|g| g.element)
        .collect();
    ensure(central == vec![h8_vec(o, &[(0, 1, 0)]), h8_vec(o, &[(3, 1, 0)])], || "ZG(H8)".into())?;

    let ones = one_dim_yd(q, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
    let in_table = c.modules().filter(|(_, m)| m.module.dim() == 1).count();
    ensure(ones.len() == 8 && in_table == 8, || format!("one-dim: {} constructed, {in_table} classified", ones.len()))?;
    Ok("|G(H_R)| = 8 with g1, N_kx, N_kg1, ZG = {1, xy}, 8 one-dim".into())
}

fn completeness(cat: &Catalog) -> Outcome {
    let (q, c) = cat.get("h8");
    let sum: usize = c.modules().map(|(_, m)| m.module.dim().pow(2)).sum();
    let dim_h = q.dim();
    ensure(sum == dim_h * dim_h && c.sum_dim_sq() == sum, || format!("sum {sum}"))?;
    Ok(format!("sum of squares {sum} = {dim_h}^2"))
}

fn group_oracle(cat: &Catalog) -> Outcome {
    let mut summary = Vec::new();
    for &name in GROUPS {
        let (code, text) = cli(&["crosscheck-group", name, "--seed", &SEED.to_string()]);
        ensure(code == 0, || format!("{name}: exit {code}: {text}"))?;
        let last = text.lines().last().unwrap_or_default().to_string();
        let order = builtin_group(name).map_err(|e| e.to_string())?.len();
        let (_, c) = cat.get(name);
        ensure(c.sum_dim_sq() == order * order, || format!("{name}: sum {}", c.sum_dim_sq()))?;
        summary.push(format!("{name} {last}"));
    }
    let (_, s3) = cat.get("s3");
    let mut dims: Vec<usize> = s3.dims().into_iter().map(|(_, d)| d).collect();
    dims.sort_unstable();
    ensure(dims == [1, 1, 2, 2, 2, 2, 3, 3], || format!("s3 dims {dims:?}"))?;
    ensure(cat.q8_time < Q8_BUDGET, || format!("q8 took {:?}", cat.q8_time))?;
    Ok(summary.join(", "))
}

fn dimension_identities(cat: &Catalog) -> Outcome {
    let mut total = 0;
    for (name, (q, _)) in &cat.entries {
        let blocks = decompose_h(q, SEED, DEFAULT_MAX_DEN).map_err(|e| e.to_string())?;
        let records = dimension_identity(q, &blocks, SEED, DEFAULT_MAX_DEN).map_err(|e| e.to_string())?;
        if let Some(bad) = records.iter().find(|r| !r.holds) {
            return Err(format!("{name}: {bad:?}"));
        }
        total += records.len();
    }
    Ok(format!("{total} (D, W, W') triples"))
}

fn divisibility(cat: &Catalog) -> Outcome {
    let mut total = 0;
    for (name, (_, c)) in &cat.entries {
        let checks = check_divisibility(c);
        if let Some(bad) = checks.iter().find(|x| x.outcome.is_fail()) {
            return Err(format!("{name}: {}", bad.name));
        }
        ensure(checks.len() == c.count(), || format!("{name}: {} checks", checks.len()))?;
        total += checks.len();
    }
    Ok(format!("{total} (U, W, V) triples"))
}

fn identity_suites() -> Outcome {
    let mut total = 0;
    for &name in CATALOG {
        let suite = identity_suite(&qt(name)?);
        if let Some(bad) = suite.iter().find(|x| !x.outcome.is_pass()) {
            return Err(format!("{name}: {} {:?}", bad.name, bad.outcome));
        }
        total += suite.len();
    }
    Ok(format!("{total} identities over {} entries", CATALOG.len()))
}

fn h_simplicity(cat: &Catalog) -> Outcome {
    let mut total = 0;
    for (name, (_, c)) in &cat.entries {
        if let Some(i) = c.blocks.iter().position(|b| !b.h_simple) {
            return Err(format!("{name}: block {i}"));
        }
        total += c.blocks.len();
    }
    Ok(format!("{total} algebras N_W"))
}

fn property_suites(cat: &Catalog, dir: &Path) -> Outcome {
    let err = |e: &dyn std::fmt::Display| e.to_string();

    // representative independence: every simple coideal of every block
    for name in ["h8", "s3", "q8"] {
        let (q, reference) = cat.get(name);
        let blocks = decompose_h(q, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
        for (b, expected) in blocks.iter().zip(&reference.blocks) {
            let count = simple_coideals(q, b, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?.len();
            for k in 0..count {
                let other = classify_block(q, b, k, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
                ensure(other.dims() == expected.dims(), || format!("{name}: coideal {k} of a block"))?;
            }
        }
    }

    // seed independence of the multiset, and byte-identical records for a fixed seed
    let (q, reference) = cat.get("h8");
    for seed in [0, 1, 2, 977, u64::MAX] {
        let c = classify_all(q, seed, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
        ensure(c.dims() == reference.dims(), || format!("seed {seed}"))?;
    }
    let mut records = Vec::new();
    for k in 0..2 {
        let path = dir.join(format!("record{k}.json"));
        let (code, text) = cli(&["classify", "--builtin", "s3", "--seed", "5", "--json", path.to_str().unwrap()]);
        ensure(code == 0, || text)?;
        records.push(std::fs::read(&path).map_err(|e| err(&e))?);
    }
    ensure(records[0] == records[1], || "records differ between runs".into())?;

    // export/load round trips through the CLI and the loader
    for &name in CATALOG {
        let path = dir.join(format!("{name}.hopf.json"));
        let (code, text) = cli(&["export", name, path.to_str().unwrap()]);
        ensure(code == 0, || text)?;
        let (h, r) = load(&path, true).map_err(|e| format!("{name}: {e}"))?;
        let e = builtin(name).map_err(|e| err(&e))?;
        ensure(h == e.hopf && r == e.r_matrix, || format!("{name}: round trip changed the structure"))?;
    }

    let controls = negative_controls(dir)?;
    Ok(format!("representatives, seeds, {} round trips, {controls} negative controls", CATALOG.len()))
}

/// Each control must fail, and fail with a witness.
fn negative_controls(dir: &Path) -> Result<usize, String> {
    let err = |e: &dyn std::fmt::Display| e.to_string();
    let mut fired = 0;

    // a perturbed coproduct on kS₃ that keeps the counit laws
    let e = builtin("s3").map_err(|e| err(&e))?;
    let mut file = export(&e.hopf, &e.r_matrix);
    for (j, k, c) in [(2, 3, "1"), (2, 0, "-1"), (0, 3, "-1"), (0, 0, "1")] {
        file.comult.push((1, j, k, c.to_string()));
    }
    let text = serde_json::to_string_pretty(&file).map_err(|e| err(&e))?;
    match load_str(&text, true) {
        Err(LoadError::Verify { axiom, witness }) if axiom == "coassoc" && !witness.is_empty() => fired += 1,
        other => return Err(format!("broken coproduct: {other:?}")),
    }
    let path = dir.join("broken.json");
    std::fs::write(&path, &text).map_err(|e| err(&e))?;
    let (code, _) = cli(&["verify", path.to_str().unwrap()]);
    ensure(code == EXIT_VERIFY, || format!("verify on a broken file exited {code}"))?;
    fired += 1;

    // H₈ is not cocommutative, so R = 1⊗1 violates the quasi-triangular axioms
    let h8 = builtin("h8").map_err(|e| err(&e))?;
    let trivial_r = Tensor::basis(h8.hopf.order(), 8, &[0, 0]);
    match verify_qt(&h8.hopf, &trivial_r) {
        Err(ydkit_core::braided::QtError::AxiomFailure { witness, .. }) if !witness.is_empty() => fired += 1,
        other => return Err(format!("trivial R on h8: {:?}", other.map(|_| ()))),
    }

    // kS₃ acting on itself by left multiplication, graded by Δ: not Yetter-Drinfeld
    let q = qt("s3")?;
    let h = q.hopf();
    let left: Vec<Mat> = (0..6).map(|i| h.algebra().left_matrix(&h.basis_vector(i))).collect();
    let bad = YDModule::from_coaction(&q, left, YDModule::regular(&q).coaction().to_vec());
    let compat = verify_yd(&q, &bad).into_iter().find(|c| c.name == "yd_compat").ok_or("no yd_compat check")?;
    match compat.outcome {
        CheckOutcome::Fail { witness } => {
            let table = symmetric3_table();
            let x = witness[0];
            ensure((0..6).any(|g| table.mul(x, g) != table.mul(g, x)), || "central witness".into())?;
            fired += 1;
        }
        other => return Err(format!("left multiplication: {other:?}")),
    }

    // a coaction that makes every ideal of the commutative N_kx costable
    let (q, _) = classify_splitting(&qt("h8")?, SEED, DEFAULT_MAX_DEN, MAX_FIELD).map_err(|e| err(&e))?;
    let o = q.order();
    let blocks = decompose_h(&q, SEED, DEFAULT_MAX_DEN).map_err(|e| err(&e))?;
    let kx = Coideal::new(&q, span(o, vec![h8_vec(o, &[(1, 1, 0)])])).ok_or("kx")?;
    let dx = blocks.iter().find(|b| b.subspace().contains_vector(&kx.vectors()[0])).ok_or("block of x")?;
    let nw = build_nw(&q, dx, &kx).map_err(|e| err(&e))?;
    let n = nw.dim();
    let mut trivial = vec![Mat::zeros(o, n, n); q.dim()];
    trivial[0] = Mat::identity(o, n);
    ensure(!is_h_simple(&nw, &trivial), || "trivially coacted N_kx is H-simple".into())?;
    ensure(nw.algebra().regular_module(Side::Right).dim() == n, || "regular module".into())?;
    fired += 1;

    // Sweedler's algebra is a Hopf algebra without a normalized integral
    let s = sweedler();
    ensure(verify_hopf(&s).passed(), || "sweedler axioms".into())?;
    ensure(integrals(&s).is_err(), || "sweedler has a normalized integral".into())?;
    fired += 1;

    Ok(fired)
}

fn main() {
    let start = Instant::now();
    let dir = tempfile::tempdir().expect("temporary directory");
    let catalog = Catalog::build();

    let mut results: Vec<(u32, &str, Outcome)> = vec![(1, "H8 classification", h8_classification(dir.path()))];
    match &catalog {
        Ok(cat) => {
            results.push((2, "H8 structural facts", h8_structure(cat)));
            results.push((3, "completeness sum", completeness(cat)));
            results.push((4, "group-algebra oracle", group_oracle(cat)));
            results.push((5, "dimension identity", dimension_identities(cat)));
            results.push((6, "divisibility", divisibility(cat)));
            results.push((7, "identity suite", identity_suites()));
            results.push((8, "H-simplicity", h_simplicity(cat)));
            results.push((9, "property suites", property_suites(cat, dir.path())));
        }
        Err(e) => {
            for (k, name) in [
                (2, "H8 structural facts"),
                (3, "completeness sum"),
                (4, "group-algebra oracle"),
                (5, "dimension identity"),
                (6, "divisibility"),
                (7, "identity suite"),
                (8, "H-simplicity"),
                (9, "property suites"),
            ] {
                results.push((k, name, Err(format!("catalog classification failed: {e}"))));
            }
        }
    }

    let elapsed = start.elapsed();
    let mut failed = 0;
    for (k, name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS {k} {name}: {detail}"),
            Err(reason) => {
                failed += 1;
                println!("FAIL {k} {name}: {reason}");
            }
        }
    }
    if elapsed >= SUITE_BUDGET {
        failed += 1;
        println!("FAIL runtime: {:.1}s over the {}s budget", elapsed.as_secs_f64(), SUITE_BUDGET.as_secs());
    } else {
        println!("acceptance finished in {:.1}s", elapsed.as_secs_f64());
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
