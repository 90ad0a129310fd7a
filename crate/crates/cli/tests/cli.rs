use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvalg::format::AlgebraFile;
use solvalg::{AlgebraPresentation, DegreeFunction, Field, Monomial, MonomialOrdering, Polynomial};
use solvalg_cli::{run_command, Outcome, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn run(args: &[&str]) -> Outcome {
    run_command(std::iter::once("solvalg").chain(args.iter().copied()))
}

fn run_on(cmd: &str, file: &Path, extra: &[&str]) -> Outcome {
    let path = file.to_str().unwrap();
    let mut args = vec![cmd, path];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn solvcheck_passes_on_example() {
    let out = run_on("solvcheck", &data("ex1.alg"), &[]);
    assert_eq!(out, Outcome { code: EXIT_OK, output: "PASS\n".into() });
}

#[test]
fn gradecheck_reports_neither_with_witness() {
    let out = run_on("gradecheck", &data("ex1-weights111.alg"), &[]);
    assert_eq!(out.code, EXIT_FAIL);
    assert!(out.output.contains("verdict Neither\n"));
    assert!(out.output.contains("witness rel a3*a1: term a2^2*a3 has degree 3, required 2\n"));
}

#[test]
fn rees_emits_expected_relation() {
    let out = run_on("rees", &data("ex1-f5.alg"), &[]);
    assert_eq!(out.code, EXIT_OK);
    assert!(out.output.lines().any(|l| l == "rel a3~*a1~ = a1~*a3~ + a2~^2*a3~ + a2~^5*Z"), "{}", out.output);
}

#[test]
fn exit_codes_follow_verdicts() {
    let cases: &[(&str, &str, &[&str], i32)] = &[
        ("gradecheck", "ex1.alg", &[], EXIT_OK),
        ("gradecheck", "ex1-f5.alg", &[], EXIT_FAIL),
        ("filtcheck", "ex1-f5.alg", &[], EXIT_OK),
        ("filtcheck", "ex1-weights111.alg", &[], EXIT_FAIL),
        ("confluence", "ex1.alg", &[], EXIT_OK),
        ("confluence", "adhoc.alg", &[], EXIT_FAIL),
        ("confluence", "adhoc.alg", &["--budget", "1"], EXIT_FAIL),
        ("findweights", "ex1.alg", &[], EXIT_OK),
        ("findweights", "ex1.alg", &["--bound", "3"], EXIT_FAIL),
        ("degreelaws", "ex1.alg", &["--box", "1"], EXIT_OK),
        ("degreelaws", "ex1.alg", &["--box", "1", "--weights", "1,1,1"], EXIT_FAIL),
        ("assoc", "ex1-f5.alg", &["--box", "1"], EXIT_OK),
        ("gr", "ex1-weights111.alg", &[], EXIT_FAIL),
        ("gradecheck", "adhoc.alg", &[], EXIT_USAGE),
        ("gradecheck", "ex1.alg", &["--weights", "1,1"], EXIT_USAGE),
        ("gradecheck", "ex1.alg", &["--weights", "1,x,1"], EXIT_USAGE),
        ("gradecheck", "missing.alg", &[], EXIT_USAGE),
        ("lm", "ex1.alg", &["a3*a1"], EXIT_USAGE),
        ("homog-at", "ex1.alg", &["a2^6", "5"], EXIT_FAIL),
    ];
    for (cmd, file, extra, code) in cases {
        let out = run_on(cmd, &data(file), extra);
        assert_eq!(out.code, *code, "{cmd} {file} {extra:?}: {}", out.output);
    }
    assert_eq!(run(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(run(&[]).code, EXIT_USAGE);
    assert_eq!(run(&["--help"]).code, EXIT_OK);
}

#[test]
fn element_commands() {
    let ex1 = data("ex1.alg");
    let cases: &[(&str, &[&str], &str)] = &[
        ("mul", &["a3", "a1"], "a1*a3 + a2^6 + a2^2*a3\n"),
        ("mul", &["a1", "-a2", "3/2"], "-3/2*a1*a2\n"),
        ("lm", &["a2^6 + a1*a3"], "a1*a3\n"),
        ("lh", &["a2^5 + a1*a3 + a2^2*a3 + 1"], "a1*a3 + a2^2*a3\n"),
        ("deg", &["a2^6 + a1"], "6\n"),
        ("sigma", &["a2^5 + a1*a3 + 1"], "s_a1*s_a3\n"),
        ("homog", &["a2^5 + a1*a3 + 1"], "a1~*a3~ + a2~^5*Z + Z^6\n"),
        ("homog-at", &["a1 + 1", "4"], "a1~*Z^2 + Z^4\n"),
        ("dehomog", &["a1~*Z^2 + Z^4"], "a1 + 1\n"),
        ("modz", &["a1~*a3~ + a2~^5*Z"], "s_a1*s_a3\n"),
    ];
    for (cmd, args, expected) in cases {
        let out = run_on(cmd, &ex1, args);
        assert_eq!(out, Outcome { code: EXIT_OK, output: expected.to_string() }, "{cmd} {args:?}");
    }
}

#[test]
fn lemma44_command() {
    let f5 = data("ex1-f5.alg");
    assert_eq!(
        run_on("lemma44", &f5, &["a2^5 + a1"]),
        Outcome { code: EXIT_OK, output: "PASS degree 5, leading monomial a2^5\n".into() }
    );
    let sampled = run_on("lemma44", &f5, &["--samples", "50", "--seed", "9"]);
    assert_eq!(sampled, Outcome { code: EXIT_OK, output: "PASS 50 samples (seed 9)\n".into() });
}

fn write_temp(dir: &tempfile::TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// (file text, line, column, expected fragment of the message)
const MALFORMED: &[(&str, usize, usize, &str)] = &[
    ("gens a1 a2\nrel a2*a1 = 0*a1*a2\n", 2, 13, "must be nonzero"),
    ("gens a1 a2\nrel a2*a3 = a1*a2\n", 2, 8, "unknown generator `a3`"),
    ("gens a1 a1\n", 1, 9, "duplicate generator `a1`"),
    ("gens a1:2 a2:0\n", 1, 14, "weights must be positive, found 0"),
    ("gens a1:2 a2:-1\n", 1, 14, "weights must be positive, found -1"),
    ("gens a1 a2\nrel a2*a1 = a1*a2\nrel a2*a1 = a1*a2 + 1\n", 3, 5, "duplicate relation"),
    ("gens a1 a2\nrel a1*a2 = a2*a1\n", 2, 5, "later generator first"),
    ("gens a1 a2\nrel a1*a1 = a1^2\n", 2, 5, "two distinct generators"),
    ("gens a1 a2\nrel a2*a1 = a1*a2 + 3/0*a1\n", 2, 21, "malformed number `3/0`"),
    ("gens a1 a2\nrel a2*a1 = a2*a1\n", 2, 16, "not in PBW order"),
    ("gens a1 a2\nrel a2*a1 = a1*a2 +\n", 2, 20, "expected a number or generator"),
    ("field R\ngens x\n", 1, 7, "unknown field"),
    ("field GF(8)\ngens x\n", 1, 10, "not a prime"),
    ("gens x y\norder lex(x>z)\n", 2, 13, "unknown generator `z`"),
    ("gens x y\norder lex(x>x)\n", 2, 13, "appears twice"),
    ("gens x y\norder grlex(1; x>y)\n", 2, 13, "expected 2 weights"),
    ("gens x y\nfoo x\n", 2, 1, "unknown directive"),
    ("gens 1x\n", 1, 6, "`1x`"),
    ("gens x:1 y\n", 1, 10, "every generator or for none"),
    ("gens x y\nrel y*x = x*y + 2*x^\n", 2, 21, "expected an integer"),
    ("gens x y\nrel y*x = x*y + x@y\n", 2, 18, "unexpected character `@`"),
    ("gens x y\n\n# c\nrel y*x = x*y +  w\n", 4, 18, "unknown generator `w`"),
    ("gens x y\nrel y*x = x*y + 1/2/3\n", 2, 20, "trailing input"),
    ("gens x y\r\nrel y*x = 0*x*y\r\n", 2, 11, "must be nonzero"),
];

#[test]
fn malformed_files_are_diagnosed_at_the_offending_token() {
    let dir = tempfile::tempdir().unwrap();
    for (k, (text, line, col, fragment)) in MALFORMED.iter().enumerate() {
        let err = AlgebraFile::parse(text).unwrap_err();
        assert_eq!((err.line, err.col), (*line, *col), "case {k}: {err}");
        assert!(err.to_string().contains(fragment), "case {k}: {err}");

        let path = write_temp(&dir, &format!("bad{k}.alg"), text);
        let out = run_on("solvcheck", &path, &[]);
        assert_eq!(out.code, EXIT_USAGE);
        assert!(out.output.starts_with(&format!("{}:{line}:{col}: ", path.display())), "case {k}: {}", out.output);
    }
}

fn corpus() -> Vec<PathBuf> {
    let mut files: Vec<PathBuf> =
        std::fs::read_dir(data("corpus")).unwrap().map(|e| e.unwrap().path()).filter(|p| p.extension().is_some_and(|e| e == "alg")).collect();
    files.sort();
    files
}

#[test]
fn corpus_round_trips_through_print() {
    let files = corpus();
    assert_eq!(files.len(), 20);
    for path in files {
        let parsed = AlgebraFile::parse(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let printed = parsed.to_string();
        let reparsed = AlgebraFile::parse(&printed).unwrap();
        assert_eq!(reparsed, parsed, "{}", path.display());
        assert_eq!(reparsed.to_string(), printed, "{}", path.display());
        assert!(!printed.contains('\r'));
    }
}

#[test]
fn corpus_algebras_are_solvable_under_their_orderings() {
    for path in corpus() {
        assert_eq!(run_on("solvcheck", &path, &[]).code, EXIT_OK, "{}", path.display());
    }
}

fn random_ordering(rng: &mut ChaCha8Rng, n: usize, declared: Option<&DegreeFunction>, allow_rees: bool) -> MonomialOrdering {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let weights = |rng: &mut ChaCha8Rng| DegreeFunction::new((0..n).map(|_| rng.gen_range(1..5)).collect()).unwrap();
    match rng.gen_range(0..if allow_rees && n >= 2 { 6 } else { 5 }) {
        0 => MonomialOrdering::lex(perm).unwrap(),
        1 => MonomialOrdering::grlex(weights(rng), perm).unwrap(),
        2 => MonomialOrdering::grevlex(weights(rng), perm).unwrap(),
        3 => {
            let d = declared.cloned().unwrap_or_else(|| weights(rng));
            MonomialOrdering::make_graded(MonomialOrdering::lex(perm).unwrap(), d).unwrap()
        }
        4 => MonomialOrdering::make_graded(MonomialOrdering::grevlex(weights(rng), perm).unwrap(), weights(rng)).unwrap(),
        _ => {
            let inner = declared.map(|d| DegreeFunction::from_weights(d.weights()[..n - 1].to_vec()).unwrap());
            MonomialOrdering::rees_extension(random_ordering(rng, n - 1, inner.as_ref(), false))
        }
    }
}

fn random_file(rng: &mut ChaCha8Rng) -> AlgebraFile {
    const POOL: &[&str] = &["a", "b2", "x_1", "Y", "z~", "t", "w9", "u_v"];
    let n = rng.gen_range(1..=4);
    let mut names: Vec<String> = POOL.choose_multiple(rng, n).map(|s| s.to_string()).collect();
    names.shuffle(rng);
    let field = *[Field::Rational, Field::prime(7).unwrap(), Field::prime(101).unwrap()].choose(rng).unwrap();
    let mut p = AlgebraPresentation::new(names, field).unwrap();
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(0.5) {
                continue;
            }
            let lambda = solvalg::sample::random_scalar(rng, field);
            let mut tail = Polynomial::zero(n);
            for _ in 0..rng.gen_range(0..4) {
                let mono = solvalg::sample::random_monomial(rng, n, 3);
                let mut e_ij = Monomial::one(n).exps().to_vec();
                e_ij[i] = 1;
                e_ij[j] = 1;
                if mono.exps() != e_ij.as_slice() {
                    tail.add_term(mono, solvalg::sample::random_scalar(rng, field));
                }
            }
            p.set_relation(i, j, lambda, tail).unwrap();
        }
    }
    let degree = rng.gen_bool(0.5).then(|| DegreeFunction::new((0..n).map(|_| rng.gen_range(1..9)).collect()).unwrap());
    let ordering = random_ordering(rng, n, degree.as_ref(), true);
    AlgebraFile { presentation: p, ordering, degree }
}

#[test]
fn constructible_files_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(61);
    for _ in 0..500 {
        let file = random_file(&mut rng);
        let printed = file.to_string();
        let reparsed = AlgebraFile::parse(&printed).unwrap_or_else(|e| panic!("{e}\n{printed}"));
        assert_eq!(reparsed, file, "{printed}");
    }
}

#[test]
fn transform_outputs_reverify_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    for source in ["ex1.alg", "ex1-f5.alg"] {
        for cmd in ["gr", "rees"] {
            let emitted = run_on(cmd, &data(source), &[]);
            assert_eq!(emitted.code, EXIT_OK);
            let path = write_temp(&dir, &format!("{cmd}-{source}"), &emitted.output);
            for check in ["solvcheck", "gradecheck", "confluence"] {
                let out = run_on(check, &path, &[]);
                assert_eq!(out.code, EXIT_OK, "{check} on {cmd} {source}: {}", out.output);
            }
            assert_eq!(run_on("assoc", &path, &["--box", "1"]).code, EXIT_OK);
        }
    }
}

#[test]
fn binary_output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_solvalg");
    let ex1 = data("adhoc.alg");
    let runs: Vec<std::process::Output> =
        (0..3).map(|_| std::process::Command::new(bin).arg("confluence").arg(&ex1).output().unwrap()).collect();
    assert_eq!(runs[0].status.code(), Some(EXIT_FAIL));
    assert!(runs.iter().all(|r| r.stdout == runs[0].stdout && r.status == runs[0].status));

    let usage = std::process::Command::new(bin).arg("solvcheck").arg("/nonexistent.alg").output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    assert!(usage.stdout.is_empty() && !usage.stderr.is_empty());
}

#[test]
fn sequential_flag_gives_identical_reports() {
    for (cmd, file) in [("degreelaws", "ex1-weights111.alg"), ("assoc", "ex1.alg"), ("confluence", "adhoc.alg")] {
        let par = run_on(cmd, &data(file), &["--box", "1"]);
        let seq = run_on(cmd, &data(file), &["--box", "1", "--sequential"]);
        assert_eq!(par, seq);
    }
}
