//! Acceptance suite: one test per shipped guarantee, each with an explicit
//! wall-clock budget. Guarantees about command line behavior run the built
//! binary; the rest drive the library directly. Every test prints its own
//! pass/fail line through the harness.

use serde_json::json;
use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};
use towers_core::comb::composition::{compositions_of, Composition};
use towers_core::comb::perm::{all_permutations, Permutation};
use towers_core::comb::word::{shuffle, shuffle_split, Word};
use towers_core::error::Result;
use towers_core::framework::checks::{
    check_condition3, check_condition5, check_conditions12, check_pairing, Group,
};
use towers_core::framework::{
    induce_pair, AlgebraPresentation, CosetReps, Decomposition, EmbeddingMap, ModuleRep,
    ProductAlgebra, Tower,
};
use towers_core::hecke0::{
    eta, g0_product_shuffle, hecke_g0_data, hecke_k0_data, hecke_pairing, nu, HeckeTower,
};
use towers_core::hopf::checks::{check_antipode, check_bialgebra, check_duality};
use towers_core::hopf::{BasisTag, PairingMatrix};
use towers_core::linalg::{rat, SparseVec};
use towers_core::sym::chars::{frobenius_ch, induce_two, inner_product, power_product, ClassFn};
use towers_core::sym::{sym_condition5_characters, sym_hopf_data, sym_pairing, SymTower};
use towers_core::z2::{z2_hopf_data, Z2Tower};

/// The harness runs tests concurrently, which would let the heavy sweeps
/// steal CPU from the cheap ones and distort their wall-clock budgets. Each
/// criterion takes this lock first, so budgets measure the criterion alone.
static SERIAL: std::sync::Mutex<()> = std::sync::Mutex::new(());

fn serial() -> std::sync::MutexGuard<'static, ()> {
    SERIAL.lock().unwrap_or_else(|e| e.into_inner())
}

fn run_cli(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_towers"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

fn budget(start: Instant, secs: u64, what: &str) {
    let elapsed = start.elapsed();
    assert!(
        elapsed <= Duration::from_secs(secs),
        "{what} took {elapsed:?}, budget {secs}s"
    );
}

fn comp(parts: &[usize]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn word(letters: &[usize]) -> Word {
    Word::new(letters.to_vec()).unwrap()
}

#[test]
fn criterion_01_worked_examples_reproduce_exactly() {
    let _serial = serial();
    let start = Instant::now();

    let t = SymTower::new();
    let e = t.embedding(2, 3).unwrap();
    let (p2, p3, p5) = (
        all_permutations(2),
        all_permutations(3),
        all_permutations(5),
    );
    let i = p2
        .binary_search(&Permutation::from_window(vec![2, 1]).unwrap())
        .unwrap();
    let j = p3
        .binary_search(&Permutation::from_window(vec![3, 1, 2]).unwrap())
        .unwrap();
    let image = e.apply(&e.source.kron(&[&SparseVec::unit(i), &SparseVec::unit(j)]));
    let expected = p5
        .binary_search(&Permutation::from_window(vec![2, 1, 5, 3, 4]).unwrap())
        .unwrap();
    assert_eq!(image, SparseVec::unit(expected));

    assert_eq!(comp(&[3, 1]).conjugate(), comp(&[2, 1, 1]));
    assert_eq!(comp(&[3, 1]).mirror(), comp(&[1, 3]));

    let i = comp(&[2, 2, 1, 3]);
    assert_eq!(i.alpha().window(), &[1, 3, 2, 6, 5, 4, 7, 8]);
    assert_eq!(i.omega().window(), &[7, 8, 5, 6, 4, 1, 2, 3]);

    let got: BTreeSet<Vec<usize>> = shuffle(&word(&[2, 1]), &word(&[3, 4]))
        .unwrap()
        .into_iter()
        .map(|w| w.letters().to_vec())
        .collect();
    let expected: BTreeSet<Vec<usize>> = [
        vec![2, 1, 3, 4],
        vec![2, 3, 1, 4],
        vec![2, 3, 4, 1],
        vec![3, 2, 1, 4],
        vec![3, 2, 4, 1],
        vec![3, 4, 2, 1],
    ]
    .into_iter()
    .collect();
    assert_eq!(got, expected);

    let v = nu(&comp(&[2, 1]));
    assert_eq!(v.mul(&v), v.scaled(&rat(-1)));

    budget(start, 1, "worked examples");
}

#[test]
fn criterion_02_counterexample_cli_fidelity() {
    let _serial = serial();
    let start = Instant::now();

    let (code, out) = run_cli(&[
        "check",
        "--tower",
        "z2",
        "--check",
        "cond5",
        "--max-degree",
        "2",
    ]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(report["status"], "fail");
    let cells = report["cells"].as_array().unwrap();
    let witness = cells
        .iter()
        .find(|c| c["inputs"]["M"] == "T" && c["inputs"]["N"] == "S" && c["inputs"]["k"] == "1")
        .expect("documented witness cell");
    assert_eq!(witness["equal"], false);
    assert_eq!(witness["lhs"], json!({"T (x) S": "1"}));
    assert_eq!(witness["rhs"], json!({"S (x) T": "1", "T (x) S": "1"}));
    // Every failure of the degree-2 sweep sits in the smallest layer
    // m = n = k = 1; all larger cells of the sweep agree.
    for c in cells.iter().filter(|c| c["equal"] == false) {
        assert_eq!(c["inputs"]["m"], "1");
        assert_eq!(c["inputs"]["n"], "1");
        assert_eq!(c["inputs"]["k"], "1");
    }

    let (code, _) = run_cli(&[
        "check",
        "--tower",
        "z2",
        "--check",
        "cond5prime",
        "--max-degree",
        "4",
    ]);
    assert_eq!(code, 0);

    // The full bialgebra suite fails, but only at product/coproduct
    // compatibility; all coassociativity and (co)unit cells pass.
    let (code, out) = run_cli(&[
        "check",
        "--tower",
        "z2",
        "--check",
        "bialgebra",
        "--max-degree",
        "4",
    ]);
    assert_eq!(code, 1);
    let report: serde_json::Value = serde_json::from_slice(&out).unwrap();
    let cells = report["cells"].as_array().unwrap();
    let mut failing = 0;
    for c in cells {
        if c["equal"] == false {
            assert_eq!(c["inputs"]["identity"], "compatibility");
            failing += 1;
        }
    }
    assert!(failing > 0);

    budget(start, 1, "counterexample CLI runs");
}

#[test]
fn criterion_03_symmetric_tower_sweeps() {
    let _serial = serial();
    let start = Instant::now();
    let t = SymTower::new();

    let r = check_conditions12(&t, 5).unwrap();
    assert!(r.passed(), "conditions 1-2: {:?}", r.first_failure());
    let r = check_condition3(&t, 5).unwrap();
    assert!(r.passed(), "condition 3: {:?}", r.first_failure());
    let r = sym_condition5_characters(&t, Group::G0, 5).unwrap();
    assert!(
        r.passed(),
        "condition 5 characters: {:?}",
        r.first_failure()
    );
    let r = check_condition5(&t, Group::G0, 4).unwrap();
    assert!(r.passed(), "condition 5 modules: {:?}", r.first_failure());

    for n in 0..=6usize {
        let table = t.chars.table(n).unwrap();
        for lam in &table.parts {
            for mu in &table.parts {
                let ip = inner_product(
                    &ClassFn::irreducible(&table, lam),
                    &ClassFn::irreducible(&table, mu),
                );
                assert_eq!(ip, rat(i64::from(lam == mu)), "<{lam},{mu}> at n={n}");
            }
        }
    }

    // ch(Ind X (x) Y) = ch(X) ch(Y) on every simple pair of total degree <= 5.
    for m in 1..=4usize {
        for n in 1..=5 - m {
            let (tm, tn) = (t.chars.table(m).unwrap(), t.chars.table(n).unwrap());
            for lam in &tm.parts {
                for mu in &tn.parts {
                    let chi_m = ClassFn::irreducible(&tm, lam);
                    let chi_n = ClassFn::irreducible(&tn, mu);
                    let induced = induce_two(&ClassFn::outer(&chi_m, &chi_n));
                    assert_eq!(
                        frobenius_ch(&induced),
                        power_product(&frobenius_ch(&chi_m), &frobenius_ch(&chi_n)),
                        "ch multiplicativity at ({lam}, {mu})"
                    );
                }
            }
        }
    }

    let h = sym_hopf_data(&t, 5).unwrap();
    let r = check_duality(&h, &h, &sym_pairing(5), 5).unwrap();
    assert!(r.passed(), "self-duality: {:?}", r.first_failure());

    budget(start, 120, "symmetric tower sweeps");
}

#[test]
fn criterion_04_hecke_tower_modules() {
    let _serial = serial();
    let start = Instant::now();
    let t = HeckeTower::new();

    // Projective dimensions sum to N! for N <= 5; building each projective
    // verifies on the way that its stated basis has full rank.
    for n in 0..=5usize {
        let total: usize = t
            .tags(n)
            .iter()
            .map(|tag| t.projective(tag).unwrap().dim)
            .sum();
        let factorial: usize = (1..=n).product();
        assert_eq!(total, factorial, "total projective dimension at degree {n}");
    }

    let r = check_pairing(&t, 4).unwrap();
    assert!(r.passed(), "pairing: {:?}", r.first_failure());

    // T_g eta_I = -eta_I when g is a descent of I, 0 otherwise.
    for n in 1..=4usize {
        for i in compositions_of(n) {
            let e = eta(&i);
            assert!(!e.is_zero());
            let descents = i.descent_set();
            for g in 1..n {
                let acted = e.left_mul_gen(g);
                if descents.contains(&g) {
                    assert_eq!(acted, e.scaled(&rat(-1)), "descent {g} of {i}");
                } else {
                    assert!(acted.is_zero(), "non-descent {g} of {i}");
                }
            }
        }
    }

    budget(start, 180, "0-Hecke tower modules");
}

#[test]
fn criterion_05_product_oracle_equivalence() {
    let _serial = serial();
    let start = Instant::now();
    let t = HeckeTower::new();

    // The descent-composition shuffle product agrees with honest module
    // induction plus composition factors on every pair of total degree <= 5.
    for m in 1..=4usize {
        for n in 1..=5 - m {
            for i in compositions_of(m) {
                for j in compositions_of(n) {
                    let ci = t.simple(&BasisTag::Composition(i.clone())).unwrap();
                    let cj = t.simple(&BasisTag::Composition(j.clone())).unwrap();
                    let w = ModuleRep::tensor(&ci, &cj);
                    let ind = induce_pair(&t, m, n, &w).unwrap();
                    let oracle = t.decompose_simples(&ind).unwrap();
                    let shuffled: Decomposition = g0_product_shuffle(&i, &j)
                        .0
                        .into_iter()
                        .map(|(tag, c)| (vec![tag], c))
                        .collect();
                    assert_eq!(shuffled, oracle, "product of {i} and {j}");
                }
            }
        }
    }

    // K_0 induction of projectives transposes to the G_0 coproduct under the
    // identity pairing in the ribbon bases.
    let k = hecke_k0_data(&t, 4).unwrap();
    let g = hecke_g0_data(4).unwrap();
    let r = check_duality(&k, &g, &hecke_pairing(4), 4).unwrap();
    assert!(r.passed(), "transpose: {:?}", r.first_failure());

    budget(start, 300, "product oracle equivalence");
}

#[test]
fn criterion_06_hopf_suites() {
    let _serial = serial();
    let start = Instant::now();

    let t = SymTower::new();
    let h = sym_hopf_data(&t, 5).unwrap();
    let r = check_bialgebra(&h, 5).unwrap();
    assert!(r.passed(), "sym bialgebra: {:?}", r.first_failure());
    let r = check_duality(&h, &h, &sym_pairing(5), 5).unwrap();
    assert!(r.passed(), "sym duality: {:?}", r.first_failure());
    let r = check_antipode(&h, 5).unwrap();
    assert!(r.passed(), "sym antipode: {:?}", r.first_failure());

    let t = HeckeTower::new();
    let g = hecke_g0_data(4).unwrap();
    let k = hecke_k0_data(&t, 4).unwrap();
    let r = check_bialgebra(&g, 4).unwrap();
    assert!(r.passed(), "hecke G0 bialgebra: {:?}", r.first_failure());
    let r = check_bialgebra(&k, 4).unwrap();
    assert!(r.passed(), "hecke K0 bialgebra: {:?}", r.first_failure());
    let r = check_duality(&k, &g, &hecke_pairing(4), 4).unwrap();
    assert!(r.passed(), "hecke duality: {:?}", r.first_failure());
    let r = check_antipode(&g, 4).unwrap();
    assert!(r.passed(), "hecke G0 antipode: {:?}", r.first_failure());
    let r = check_antipode(&k, 4).unwrap();
    assert!(r.passed(), "hecke K0 antipode: {:?}", r.first_failure());

    budget(start, 120, "Hopf suites");
}

#[test]
fn criterion_07_shuffle_split_exhaustive() {
    let _serial = serial();
    let start = Instant::now();

    for total in 0..=7usize {
        for a in 0..=total {
            let b = total - a;
            for u in all_permutations(a) {
                let u = word(u.window());
                for v in all_permutations(b) {
                    let v = Word::new(v.window().iter().map(|&x| x + a).collect()).unwrap();
                    let mut full: Vec<Word> = shuffle(&u, &v).unwrap();
                    full.sort();
                    for k in 0..=total {
                        let split = shuffle_split(&u, &v, k).unwrap();
                        assert_eq!(split, full, "u={u} v={v} k={k}");
                    }
                }
            }
        }
    }

    budget(start, 30, "shuffle split sweep");
}

#[test]
fn criterion_08_descent_classes_are_weak_order_intervals() {
    let _serial = serial();
    let start = Instant::now();

    for n in 1..=6usize {
        let perms = all_permutations(n);
        for i in compositions_of(n) {
            let class: BTreeSet<Permutation> = i.descent_class().into_iter().collect();
            let interval: BTreeSet<Permutation> = perms
                .iter()
                .filter(|s| i.interval_contains(s))
                .cloned()
                .collect();
            assert_eq!(class, interval, "I={i}");
            assert!(class.contains(&i.alpha()) && class.contains(&i.omega()));
        }
    }

    budget(start, 30, "descent interval sweep");
}

/// Wraps the idempotent tower but flips the sign of one image column of
/// rho_{1,1}, which breaks unitality and multiplicativity of that embedding.
struct CorruptedTower(Z2Tower);

impl Tower for CorruptedTower {
    fn name(&self) -> &'static str {
        "z2-corrupted"
    }
    fn algebra_cap(&self) -> usize {
        self.0.algebra_cap()
    }
    fn module_cap(&self) -> usize {
        self.0.module_cap()
    }
    fn algebra(&self, n: usize) -> Result<std::sync::Arc<AlgebraPresentation>> {
        self.0.algebra(n)
    }
    fn embedding(&self, m: usize, n: usize) -> Result<std::sync::Arc<EmbeddingMap>> {
        let real = self.0.embedding(m, n)?;
        if (m, n) != (1, 1) {
            return Ok(real);
        }
        let source = ProductAlgebra::new(vec![self.0.algebra(m)?, self.0.algebra(n)?]);
        let dim = source.dim();
        let mut columns: Vec<SparseVec> = (0..dim).map(|i| real.column(i).clone()).collect();
        columns[dim - 1] = columns[dim - 1].scaled(&rat(-1));
        Ok(std::sync::Arc::new(EmbeddingMap::new_unchecked(
            m,
            n,
            source,
            real.target.clone(),
            columns,
        )))
    }
    fn tags(&self, n: usize) -> Vec<BasisTag> {
        self.0.tags(n)
    }
    fn simple(&self, tag: &BasisTag) -> Result<std::sync::Arc<ModuleRep>> {
        self.0.simple(tag)
    }
    fn projective(&self, tag: &BasisTag) -> Result<std::sync::Arc<ModuleRep>> {
        self.0.projective(tag)
    }
    fn decompose_simples(&self, module: &ModuleRep) -> Result<Decomposition> {
        self.0.decompose_simples(module)
    }
    fn coset_reps(&self, m: usize, n: usize) -> Result<CosetReps> {
        self.0.coset_reps(m, n)
    }
}

#[test]
fn criterion_09_negative_controls_fail_with_witnesses() {
    let _serial = serial();
    let start = Instant::now();

    let r = check_conditions12(&CorruptedTower(Z2Tower::new()), 2).unwrap();
    assert!(!r.passed());
    let witness = r.first_failure().unwrap();
    assert_eq!(witness.inputs["property"], "embedding");
    assert_eq!(witness.inputs["m"], "1");
    assert_eq!(witness.inputs["n"], "1");
    let text = witness.lhs.as_str().unwrap();
    assert!(text.contains("invalid"), "witness text: {text}");

    let h = z2_hopf_data(2).unwrap();
    let sizes: Vec<usize> = (0..=2).map(|n| h.basis(n).len()).collect();
    let r = check_duality(&h, &h, &PairingMatrix::zero(&sizes), 2).unwrap();
    assert!(!r.passed());
    let witness = r.first_failure().unwrap();
    assert!(witness.inputs["identity"]
        .as_str()
        .unwrap()
        .contains("adjoint"));

    budget(start, 30, "negative controls");
}

#[test]
fn criterion_10_cli_reports_are_byte_deterministic() {
    let _serial = serial();
    let start = Instant::now();

    let requests: Vec<Vec<&str>> = vec![
        vec![
            "check",
            "--tower",
            "z2",
            "--check",
            "cond5",
            "--max-degree",
            "2",
        ],
        vec![
            "check",
            "--tower",
            "sym",
            "--check",
            "cond5",
            "--max-degree",
            "4",
        ],
        vec![
            "check",
            "--tower",
            "hecke0",
            "--check",
            "bialgebra",
            "--max-degree",
            "3",
        ],
        vec![
            "check",
            "--tower",
            "z2",
            "--check",
            "duality",
            "--max-degree",
            "3",
            "--format",
            "csv",
        ],
        vec![
            "table",
            "--tower",
            "sym",
            "--op",
            "characters",
            "--degree",
            "5",
        ],
        vec![
            "table",
            "--tower",
            "hecke0",
            "--op",
            "module-bases",
            "--composition",
            "2,1",
        ],
    ];
    for args in &requests {
        let (c1, o1) = run_cli(args);
        let (c2, o2) = run_cli(args);
        assert_eq!(c1, c2, "exit codes differ for {args:?}");
        assert!(!o1.is_empty());
        assert_eq!(o1, o2, "bytes differ for {args:?}");
    }

    budget(start, 60, "determinism runs");
}
