//! Command-line front end: every kernel capability behind one subcommand.
//!
//! [`run_command`] does all the work and returns the exit status with the
//! report text, so tests can drive the tool in-process.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use solvalg::format::{parse_poly, parse_poly_names, AlgebraFile};
use solvalg::rewrite::{check_associativity, check_pbw_confluence_with, SolvableReport};
use solvalg::transform::{self, Lemma44Report};
use solvalg::verify::{self, DegreeLawReport, TypeReport, TypeVerdict, WeightMode};
use solvalg::{
    check_solvable, AlgebraError, AlgebraPresentation, ConfluenceReport, DegreeFunction, Exec,
    Monomial, MonomialOrdering, Multiplier, Polynomial, DEFAULT_BUDGET,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Exit status plus everything the command printed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(name = "solvalg", version, about = "Checks and transforms for solvable polynomial algebras")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Exponent bound for exhaustive checks
    #[arg(long = "box", global = true, default_value_t = 2, value_name = "N")]
    box_bound: u32,
    /// Upper bound on each weight in weight search
    #[arg(long, global = true, default_value_t = 16, value_name = "W")]
    bound: u64,
    /// Rewrite step budget
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET, value_name = "S")]
    budget: u64,
    /// Seed for randomized sampling
    #[arg(long, global = true, default_value_t = 0, value_name = "S")]
    seed: u64,
    /// Comma-separated weights overriding the ones declared in the file
    #[arg(long, global = true, value_name = "W1,W2,..")]
    weights: Option<String>,
    /// Run exhaustive checks on one thread
    #[arg(long, global = true)]
    sequential: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Graded,
    Filtered,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that every tail leads below its left-hand side
    Solvcheck { file: PathBuf },
    /// Resolve every overlap a_k a_j a_i both ways
    Confluence { file: PathBuf },
    /// Graded-type verdict for the weights
    Gradecheck { file: PathBuf },
    /// Filtered-type verdict for the weights
    Filtcheck { file: PathBuf },
    /// Smallest weights making the algebra graded or filtered
    Findweights {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "graded")]
        mode: Mode,
    },
    /// Exhaustive degree laws on the --box
    Degreelaws { file: PathBuf },
    /// Exhaustive associativity on the --box
    Assoc { file: PathBuf },
    /// Product of one or more polynomials, left to right
    Mul {
        file: PathBuf,
        #[arg(required = true, allow_hyphen_values = true)]
        polys: Vec<String>,
    },
    /// Leading monomial under the file's ordering
    Lm { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Leading homogeneous part
    Lh { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Degree
    Deg { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Principal symbol in G(A)
    Sigma { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Homogenization in the Rees algebra
    Homog { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Homogenization at a level p >= deg
    #[command(name = "homog-at")]
    HomogAt {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        level: u64,
    },
    /// Set Z = 1 in a Rees element
    Dehomog { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Reduce a Rees element modulo Z
    Modz { file: PathBuf, #[arg(allow_hyphen_values = true)] poly: String },
    /// Reprint an algebra file in canonical form
    Print { file: PathBuf },
    /// Print the associated graded algebra as an algebra file
    Gr { file: PathBuf },
    /// Print the Rees algebra as an algebra file
    Rees { file: PathBuf },
    /// Symbol and homogenization laws for one polynomial, or --samples random ones
    Lemma44 {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        poly: Option<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

enum CliError {
    Usage(String),
    Failed(String),
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        CliError::Failed(format!("error: {e}\n"))
    }
}

type CliResult = std::result::Result<(i32, String), CliError>;

/// Parse `argv` (program name first) and run the command.
pub fn run_command<I, S>(argv: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match dispatch(&cli) {
        Ok((code, output)) => Outcome { code, output },
        Err(CliError::Usage(msg)) => Outcome { code: EXIT_USAGE, output: msg },
        Err(CliError::Failed(msg)) => Outcome { code: EXIT_FAIL, output: msg },
    }
}

fn load(path: &Path) -> std::result::Result<AlgebraFile, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}\n", path.display())))?;
    AlgebraFile::parse(&text).map_err(|e| CliError::Usage(format!("{}:{e}\n", path.display())))
}

fn poly_arg(text: &str, pres: &AlgebraPresentation) -> std::result::Result<Polynomial, CliError> {
    parse_poly(text, pres).map_err(|e| CliError::Usage(format!("polynomial `{text}`: {}\n", e.kind)))
}

fn degree_of(file: &AlgebraFile, opts: &Opts) -> std::result::Result<DegreeFunction, CliError> {
    let n = file.presentation.nvars();
    let d = match &opts.weights {
        Some(list) => {
            let parsed: std::result::Result<Vec<i64>, _> = list.split(',').map(|s| s.trim().parse()).collect();
            let parsed = parsed.map_err(|_| CliError::Usage(format!("--weights: malformed list `{list}`\n")))?;
            DegreeFunction::new(parsed).map_err(|e| CliError::Usage(format!("--weights: {e}\n")))?
        }
        None => file
            .degree
            .clone()
            .ok_or_else(|| CliError::Usage("no weights: declare gens as name:weight or pass --weights\n".into()))?,
    };
    if d.nvars() != n {
        return Err(CliError::Usage(format!("--weights: expected {n} weights, found {}\n", d.nvars())));
    }
    Ok(d)
}

fn weight_list(d: &DegreeFunction) -> String {
    d.weights().iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn pair_name(names: &[String], i: usize, j: usize) -> String {
    format!("{}*{}", names[j], names[i])
}

fn rees_names(names: &[String]) -> Vec<String> {
    let mut out: Vec<String> = names.iter().map(|s| transform::rees_name(s)).collect();
    out.push(transform::REES_CENTRAL.to_string());
    out
}

fn sigma_names(names: &[String]) -> Vec<String> {
    names.iter().map(|s| transform::sigma_name(s)).collect()
}

fn type_report(out: &mut String, names: &[String], d: &DegreeFunction, report: &TypeReport) {
    let _ = writeln!(out, "weights {}", weight_list(d));
    let _ = writeln!(out, "verdict {:?}", report.verdict);
    for w in &report.witnesses {
        let _ = writeln!(
            out,
            "witness rel {}: term {} has degree {}, required {}",
            pair_name(names, w.i, w.j),
            w.term.display(names),
            w.degree,
            w.required
        );
    }
}

fn dispatch(cli: &Cli) -> CliResult {
    let opts = &cli.opts;
    let exec = if opts.sequential { Exec::Sequential } else { Exec::default() };
    let mut out = String::new();
    let code = match &cli.cmd {
        Command::Solvcheck { file } => {
            let f = load(file)?;
            let names = f.presentation.names();
            match check_solvable(&f.presentation, &f.ordering)? {
                SolvableReport::Pass => {
                    out.push_str("PASS\n");
                    EXIT_OK
                }
                SolvableReport::Fail { i, j, leading } => {
                    let _ = writeln!(
                        out,
                        "FAIL rel {}: leading tail monomial {} is not below {}*{}",
                        pair_name(names, i, j),
                        leading.display(names),
                        names[i],
                        names[j]
                    );
                    EXIT_FAIL
                }
            }
        }
        Command::Confluence { file } => {
            let f = load(file)?;
            let names = f.presentation.names();
            let triple = |(i, j, k): (usize, usize, usize)| format!("{}*{}*{}", names[k], names[j], names[i]);
            match check_pbw_confluence_with(&f.presentation, opts.budget, exec)? {
                ConfluenceReport::Pass => {
                    out.push_str("PASS\n");
                    EXIT_OK
                }
                ConfluenceReport::Diverges { triple: t, left, right } => {
                    let (i, j, k) = t;
                    let _ = writeln!(out, "FAIL overlap {} diverges", triple(t));
                    let _ = writeln!(out, "  ({}*{})*{} = {}", names[k], names[j], names[i], left.display(names, &f.ordering));
                    let _ = writeln!(out, "  {}*({}*{}) = {}", names[k], names[j], names[i], right.display(names, &f.ordering));
                    EXIT_FAIL
                }
                ConfluenceReport::BudgetExceeded { triple: t, budget } => {
                    let _ = writeln!(out, "FAIL overlap {} exceeded the budget of {budget} rewrite steps", triple(t));
                    EXIT_FAIL
                }
            }
        }
        Command::Gradecheck { file } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let report = verify::check_graded_type(&f.presentation, &d)?;
            type_report(&mut out, f.presentation.names(), &d, &report);
            if report.verdict == TypeVerdict::Graded { EXIT_OK } else { EXIT_FAIL }
        }
        Command::Filtcheck { file } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let report = verify::check_filtered_type(&f.presentation, &d)?;
            type_report(&mut out, f.presentation.names(), &d, &report);
            if report.verdict == TypeVerdict::Neither { EXIT_FAIL } else { EXIT_OK }
        }
        Command::Findweights { file, mode } => {
            let f = load(file)?;
            let mode = match mode {
                Mode::Graded => WeightMode::Graded,
                Mode::Filtered => WeightMode::Filtered,
            };
            match verify::find_weights(&f.presentation, mode, opts.bound) {
                Some(d) => {
                    let _ = writeln!(out, "weights {}", weight_list(&d));
                    EXIT_OK
                }
                None => {
                    let _ = writeln!(out, "none with every weight in 1..={}", opts.bound);
                    EXIT_FAIL
                }
            }
        }
        Command::Degreelaws { file } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let names = f.presentation.names();
            let report = verify::verify_degree_laws_with(&f.presentation, &d, opts.box_bound, exec)?;
            let show = |m: &Monomial| m.display(names).to_string();
            let passed = report.passed();
            match report {
                DegreeLawReport::Pass => out.push_str("PASS\n"),
                DegreeLawReport::Additivity { factors: [a, b], product_degree, expected } => {
                    let _ = writeln!(
                        out,
                        "FAIL additivity: ({})*({}) has degree {product_degree}, expected {expected}",
                        show(&a),
                        show(&b)
                    );
                }
                DegreeLawReport::MiddleFactor { factors: [a, b, c], middle_degree, leading_degree } => {
                    let _ = writeln!(
                        out,
                        "FAIL middle factor: ({})*({})*({}) has leading degree {leading_degree}, middle factor degree {middle_degree}",
                        show(&a),
                        show(&b),
                        show(&c)
                    );
                }
                DegreeLawReport::Monotonicity { lower, higher, left, right } => {
                    let _ = writeln!(
                        out,
                        "FAIL monotonicity: {} below {} but not after multiplying by {} on the left and {} on the right",
                        show(&lower),
                        show(&higher),
                        show(&left),
                        show(&right)
                    );
                }
            }
            if passed { EXIT_OK } else { EXIT_FAIL }
        }
        Command::Assoc { file } => {
            let f = load(file)?;
            let names = f.presentation.names();
            match check_associativity(&f.presentation, opts.box_bound, exec)? {
                None => {
                    out.push_str("PASS\n");
                    EXIT_OK
                }
                Some(v) => {
                    let [a, b, c] = &v.factors;
                    let (a, b, c) = (a.display(names), b.display(names), c.display(names));
                    let _ = writeln!(out, "FAIL ({a})*({b})*({c}) depends on bracketing");
                    let _ = writeln!(out, "  left  = {}", v.left.display(names, &f.ordering));
                    let _ = writeln!(out, "  right = {}", v.right.display(names, &f.ordering));
                    EXIT_FAIL
                }
            }
        }
        Command::Mul { file, polys } => {
            let f = load(file)?;
            let factors = polys.iter().map(|t| poly_arg(t, &f.presentation)).collect::<std::result::Result<Vec<_>, _>>()?;
            let refs: Vec<&Polynomial> = factors.iter().collect();
            let prod = Multiplier::with_budget(&f.presentation, opts.budget).mul_all(&refs)?;
            let _ = writeln!(out, "{}", prod.display(f.presentation.names(), &f.ordering));
            EXIT_OK
        }
        Command::Lm { file, poly } => {
            let f = load(file)?;
            let p = poly_arg(poly, &f.presentation)?;
            let lm = f.ordering.leading_monomial(&p)?;
            let _ = writeln!(out, "{}", lm.display(f.presentation.names()));
            EXIT_OK
        }
        Command::Lh { file, poly } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let p = poly_arg(poly, &f.presentation)?;
            let _ = writeln!(out, "{}", d.leading_homogeneous(&p)?.display(f.presentation.names(), &f.ordering));
            EXIT_OK
        }
        Command::Deg { file, poly } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let p = poly_arg(poly, &f.presentation)?;
            let _ = writeln!(out, "{}", d.deg_poly(&p)?);
            EXIT_OK
        }
        Command::Sigma { file, poly } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let p = poly_arg(poly, &f.presentation)?;
            let names = sigma_names(f.presentation.names());
            let _ = writeln!(out, "{}", transform::sigma(&p, &d)?.display(&names, &f.ordering));
            EXIT_OK
        }
        Command::Homog { file, poly } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let p = poly_arg(poly, &f.presentation)?;
            let names = rees_names(f.presentation.names());
            let ord = MonomialOrdering::rees_extension(f.ordering.clone());
            let _ = writeln!(out, "{}", transform::homogenize(&p, &d)?.display(&names, &ord));
            EXIT_OK
        }
        Command::HomogAt { file, poly, level } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let p = poly_arg(poly, &f.presentation)?;
            let names = rees_names(f.presentation.names());
            let ord = MonomialOrdering::rees_extension(f.ordering.clone());
            let _ = writeln!(out, "{}", transform::homogenize_to_level(&p, &d, *level)?.display(&names, &ord));
            EXIT_OK
        }
        Command::Dehomog { file, poly } | Command::Modz { file, poly } => {
            let f = load(file)?;
            let names = rees_names(f.presentation.names());
            let h = parse_poly_names(poly, &names, f.presentation.field())
                .map_err(|e| CliError::Usage(format!("polynomial `{poly}`: {}\n", e.kind)))?;
            let (image, names) = if matches!(cli.cmd, Command::Dehomog { .. }) {
                (transform::dehomogenize(&h), f.presentation.names().to_vec())
            } else {
                (transform::project_mod_z(&h), sigma_names(f.presentation.names()))
            };
            let _ = writeln!(out, "{}", image.display(&names, &f.ordering));
            EXIT_OK
        }
        Command::Print { file } => {
            out.push_str(&load(file)?.to_string());
            EXIT_OK
        }
        Command::Gr { file } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let g = transform::build_assoc_graded(&f.presentation, &d, &f.ordering)?;
            let emitted = AlgebraFile { presentation: g.presentation, ordering: g.ordering, degree: Some(g.degree) };
            out.push_str(&emitted.to_string());
            EXIT_OK
        }
        Command::Rees { file } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let r = transform::build_rees(&f.presentation, &d, &f.ordering)?;
            let emitted = AlgebraFile { presentation: r.presentation, ordering: r.ordering, degree: Some(r.degree) };
            out.push_str(&emitted.to_string());
            EXIT_OK
        }
        Command::Lemma44 { file, poly, samples } => {
            let f = load(file)?;
            let d = degree_of(&f, opts)?;
            let g = transform::build_assoc_graded(&f.presentation, &d, &f.ordering)?;
            let r = transform::build_rees(&f.presentation, &d, &f.ordering)?;
            let inputs = match poly {
                Some(text) => vec![poly_arg(text, &f.presentation)?],
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                    let n = f.presentation.nvars();
                    (0..*samples)
                        .map(|_| solvalg::sample::random_poly(&mut rng, n, f.presentation.field(), 3, 5))
                        .collect()
                }
            };
            let names = f.presentation.names();
            let mut code = EXIT_OK;
            for p in &inputs {
                match transform::lemma44_check(&g, &r, &d, &f.ordering, p)? {
                    Lemma44Report::Pass { degree, leading } if inputs.len() == 1 => {
                        let _ = writeln!(out, "PASS degree {degree}, leading monomial {}", leading.display(names));
                    }
                    Lemma44Report::Pass { .. } => {}
                    Lemma44Report::Fail(v) => {
                        let _ = writeln!(out, "FAIL f = {}: {v:?}", p.display(names, &f.ordering));
                        code = EXIT_FAIL;
                        break;
                    }
                }
            }
            if inputs.len() != 1 && code == EXIT_OK {
                let _ = writeln!(out, "PASS {} samples (seed {})", inputs.len(), opts.seed);
            }
            code
        }
    };
    Ok((code, out))
}
