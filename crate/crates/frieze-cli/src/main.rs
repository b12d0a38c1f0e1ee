//! Command-line surface over the frieze library.
//!
//! All results go to stdout (JSON or exact text), diagnostics to stderr.
//! Exit codes: 0 success, 1 domain or input errors, 2 usage errors.

use std::collections::BTreeSet;
use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use frieze::arith::{
    connected_sum, dihedral_orbits, enumerate_arithmetic, grow_from_unit_zigzag, stabilize,
    ArithFrieze, BoundaryShape, SearchConfig,
};
use frieze::classical;
use frieze::cluster::{
    bipartite_belt, omega_matrix, read_zigzag, zigzag_quiver, ZigMove, ZigZag,
};
use frieze::frieze::{
    count_distinct_entries, entry_by_determinant, frieze_from_coefficients, verify_closed_symmetries,
    verify_pattern_rule, DoubledIndex,
};
use frieze::io;
use frieze::polygon::{is_closed, is_convex, lift_projective, polygon_to_coefficients, solve_polygon};
use frieze::rat::Rat;

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact computations with 2-frieze patterns")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Shape {
    Staircase,
    Columns,
    Zigzag,
}

#[derive(Subcommand)]
enum Command {
    /// Propagate the frieze of a coefficient row and export the window.
    Gen {
        #[arg(long)]
        frieze: PathBuf,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Closure, width, pattern rule and symmetry checks.
    Check {
        #[arg(long)]
        frieze: PathBuf,
    },
    /// Single entry by the determinant formula; indices may be half-integers.
    Entries {
        #[arg(long)]
        frieze: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        i: String,
        #[arg(long, allow_hyphen_values = true)]
        j: String,
    },
    /// Enumerate arithmetic friezes with chart values up to a bound.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value = "1")]
        jobs: usize,
        /// Write tuples as JSON lines here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Group first-row tuples (JSON lines) into dihedral orbits.
    Orbits {
        /// JSON-lines file; stdin when omitted.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// One-point stabilization at a cut.
    Stabilize {
        #[arg(long)]
        frieze: PathBuf,
        #[arg(long, default_value = "2")]
        cut: usize,
    },
    /// Connected sum of two arithmetic friezes.
    Consum {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value = "2")]
        cut_left: usize,
        #[arg(long, default_value = "1")]
        cut_right: usize,
    },
    /// Solve a closed frieze into a polygon, or recover coefficients.
    Polygon {
        #[arg(long, conflicts_with = "from_polygon")]
        frieze: Option<PathBuf>,
        #[arg(long)]
        from_polygon: Option<PathBuf>,
    },
    /// Rescale projective points to unit consecutive determinants.
    Lift {
        #[arg(long)]
        points: PathBuf,
    },
    /// Walk the bipartite belt from a double-column seed.
    Belt {
        #[arg(long)]
        n: usize,
        /// Comma-separated chart values (x's then y's); default all ones.
        #[arg(long)]
        init: Option<String>,
        #[arg(long)]
        steps: usize,
    },
    /// Read a zig-zag chart off a closed frieze.
    Zigzag {
        #[arg(long)]
        frieze: PathBuf,
        /// Moves between rows: L, S, R.
        #[arg(long, default_value = "")]
        moves: String,
        #[arg(long, default_value = "0")]
        start: i64,
        /// Also print the chart's quiver.
        #[arg(long)]
        quiver: bool,
    },
    /// Presymplectic form of the double-column chart: matrix, rank, kernel.
    Omega {
        #[arg(long)]
        n: usize,
        /// Also print the matrix entries.
        #[arg(long)]
        matrix: bool,
    },
    /// Classical (Coxeter-Conway) patterns.
    Cc {
        #[command(subcommand)]
        command: CcCommand,
    },
    /// Grow a semi-infinite integer pattern from a unit boundary.
    Grow {
        #[arg(long, value_enum)]
        shape: Shape,
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
}

#[derive(Subcommand)]
enum CcCommand {
    /// All arithmetic quiddity tuples of a period (Catalan many).
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Propagate the pattern of a quiddity row.
    Gen {
        #[arg(long)]
        quiddity: PathBuf,
        #[arg(long)]
        depth: usize,
    },
    /// Closure (monodromy -Id) check.
    Check {
        #[arg(long)]
        quiddity: PathBuf,
    },
    /// Quiddity of a polygon triangulation, e.g. --diagonals 1-3,1-4.
    FromTriangulation {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        diagonals: String,
    },
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::new().filter("FRIEZE_LOG")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(1);
        }
    }
}

type CliResult = Result<(), Box<dyn std::error::Error>>;

fn read_frieze(path: &PathBuf) -> Result<frieze::CoefficientRow, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    let json: io::FriezeJson = serde_json::from_str(&text)?;
    Ok(io::frieze_from_json(&json)?)
}

fn read_arith(path: &PathBuf) -> Result<ArithFrieze, Box<dyn std::error::Error>> {
    Ok(ArithFrieze::new(read_frieze(path)?)?)
}

fn print_frieze(coeffs: &frieze::CoefficientRow) -> CliResult {
    println!("{}", serde_json::to_string(&io::frieze_to_json(coeffs))?);
    Ok(())
}

fn parse_half_index(text: &str) -> Result<i64, Box<dyn std::error::Error>> {
    // doubled value of an integer or half-integer written as p or p/2
    let r = Rat::parse(text)?;
    let doubled = &r + &r;
    doubled
        .to_i64()
        .ok_or_else(|| format!("index {text} is not an integer or half-integer").into())
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Gen { frieze, depth, format } => {
            let coeffs = read_frieze(&frieze)?;
            let w = frieze_from_coefficients(&coeffs, depth);
            match format {
                Format::Csv => print!("{}", io::window_to_csv(&w)),
                Format::Json => println!("{}", serde_json::to_string(&io::window_to_json(&w))?),
            }
            Ok(())
        }
        Command::Check { frieze } => {
            let coeffs = read_frieze(&frieze)?;
            let closed = is_closed(&coeffs);
            println!("closed: {closed}");
            if closed {
                println!("width: {}", coeffs.n() - 4);
                println!("distinct-entries: {}", count_distinct_entries(&coeffs)?);
                let report = verify_closed_symmetries(&coeffs)?;
                println!(
                    "symmetries: row-periodic={} diagonal-periodic={} glide={}",
                    report.row_periodic, report.diagonal_periodic, report.glide
                );
            } else {
                let m = frieze::polygon::monodromy(&coeffs);
                log::info!("monodromy differs from the identity");
                println!("monodromy: {}", render_matrix(m.matrix()));
            }
            let w = frieze_from_coefficients(&coeffs, coeffs.n());
            println!("rule-violations: {}", verify_pattern_rule(&w).len());
            Ok(())
        }
        Command::Entries { frieze, i, j } => {
            let coeffs = read_frieze(&frieze)?;
            let (p, q) = (parse_half_index(&i)?, parse_half_index(&j)?);
            let idx = DoubledIndex::new(p, q)?;
            if idx.row() < -1 {
                return Err("need i >= j - 1".into());
            }
            println!("{}", entry_by_determinant(&coeffs, idx));
            Ok(())
        }
        Command::Enumerate { n, bound, jobs, output } => {
            let cfg = SearchConfig { n, value_bound: bound, jobs };
            let found = enumerate_arithmetic(&cfg);
            let lines: Vec<String> =
                found.iter().map(|t| serde_json::to_string(t).unwrap()).collect();
            match output {
                Some(path) => {
                    let mut f = fs::File::create(path)?;
                    for line in &lines {
                        writeln!(f, "{line}")?;
                    }
                    println!("count: {}", found.len());
                    println!("bound: {bound}");
                }
                None => {
                    for line in &lines {
                        println!("{line}");
                    }
                    eprintln!("count: {}", found.len());
                    eprintln!("bound: {bound}");
                }
            }
            Ok(())
        }
        Command::Orbits { input } => {
            let text = match input {
                Some(path) => fs::read_to_string(path)?,
                None => {
                    let mut buf = String::new();
                    for line in std::io::stdin().lock().lines() {
                        buf.push_str(&line?);
                        buf.push('\n');
                    }
                    buf
                }
            };
            let mut tuples = BTreeSet::new();
            for line in text.lines().filter(|l| !l.trim().is_empty()) {
                let t: Vec<u64> = serde_json::from_str(line)?;
                tuples.insert(t);
            }
            let orbits = dihedral_orbits(&tuples);
            for o in &orbits {
                println!(
                    "{{\"representative\":{},\"size\":{}}}",
                    serde_json::to_string(&o.representative)?,
                    o.size
                );
            }
            eprintln!("orbits: {}", orbits.len());
            Ok(())
        }
        Command::Stabilize { frieze, cut } => {
            let f = read_arith(&frieze)?;
            let out = stabilize(&f, cut)?;
            print_frieze(out.coeffs())
        }
        Command::Consum { left, right, cut_left, cut_right } => {
            let f = read_arith(&left)?;
            let g = read_arith(&right)?;
            let out = connected_sum(&f, &g, cut_left, cut_right)?;
            print_frieze(out.coeffs())
        }
        Command::Polygon { frieze, from_polygon } => match (frieze, from_polygon) {
            (Some(path), None) => {
                let coeffs = read_frieze(&path)?;
                let poly = solve_polygon(&coeffs)?;
                println!("{}", serde_json::to_string(&io::polygon_to_json(&poly))?);
                eprintln!("convex: {}", is_convex(&poly));
                Ok(())
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)?;
                let json: io::PolygonJson = serde_json::from_str(&text)?;
                let poly = io::polygon_from_json(&json)?;
                let coeffs = polygon_to_coefficients(&poly)?;
                print_frieze(&coeffs)
            }
            _ => Err("pass exactly one of --frieze or --from-polygon".into()),
        },
        Command::Lift { points } => {
            let text = fs::read_to_string(points)?;
            let json: io::PolygonJson = serde_json::from_str(&text)?;
            let pts: Vec<[f64; 3]> = json
                .vertices
                .iter()
                .map(|v| -> Result<[f64; 3], Box<dyn std::error::Error>> {
                    let mut out = [0.0; 3];
                    for (k, s) in v.iter().enumerate() {
                        out[k] = match Rat::parse(s) {
                            Ok(r) => r.to_f64(),
                            Err(_) => s.trim().parse::<f64>()?,
                        };
                    }
                    Ok(out)
                })
                .collect::<Result<_, _>>()?;
            let lifted = lift_projective(&pts)?;
            let vertices: Vec<Vec<f64>> = lifted.vertices.iter().map(|v| v.to_vec()).collect();
            println!(
                "{}",
                serde_json::json!({ "vertices": vertices, "det_sign": lifted.det_sign })
            );
            Ok(())
        }
        Command::Belt { n, init, steps } => {
            let w = n.checked_sub(4).filter(|w| *w >= 1).ok_or("period must be at least 5")?;
            let values: Vec<Rat> = match init {
                Some(text) => text
                    .split(',')
                    .map(|s| Rat::parse(s.trim()))
                    .collect::<Result<_, _>>()?,
                None => vec![Rat::one(); 2 * w],
            };
            let seeds = bipartite_belt(n, &values, steps)?;
            for seed in &seeds {
                println!("{}", serde_json::to_string(&io::seed_to_json(seed))?);
            }
            Ok(())
        }
        Command::Zigzag { frieze, moves, start, quiver } => {
            let coeffs = read_frieze(&frieze)?;
            let window = frieze_from_coefficients(&coeffs, coeffs.n());
            let z = ZigZag::new(coeffs.n(), start, ZigMove::parse_path(&moves)?)?;
            let values = read_zigzag(&window, &z)?;
            let rendered: Vec<String> = values.iter().map(Rat::to_string).collect();
            println!("{}", serde_json::json!({ "values": rendered }));
            if quiver {
                let q = zigzag_quiver(&z)?;
                println!("{}", serde_json::to_string(&io::quiver_to_json(&q))?);
            }
            Ok(())
        }
        Command::Omega { n, matrix } => {
            let form = omega_matrix(n)?;
            println!("rank: {}", form.rank);
            println!("corank: {}", form.corank);
            match &form.null_vector {
                Some(v) => {
                    let coeffs: Vec<String> = v.iter().map(Rat::to_string).collect();
                    println!("nullvector: [{}]", coeffs.join(", "));
                }
                None => println!("nullvector: none"),
            }
            if matrix {
                println!("{}", render_matrix(&form.matrix));
            }
            Ok(())
        }
        Command::Cc { command } => run_cc(command),
        Command::Grow { shape, rows, cols } => {
            let shape = match shape {
                Shape::Staircase => BoundaryShape::Staircase,
                Shape::Columns => BoundaryShape::DoubleColumn,
                Shape::Zigzag => BoundaryShape::ZigZag,
            };
            let g = grow_from_unit_zigzag(shape, rows, cols);
            for r in 0..=rows {
                let cells: Vec<String> = (1..=cols)
                    .map(|c| g.get(r, c).map(Rat::to_string).unwrap_or_default())
                    .collect();
                println!("{}", cells.join(","));
            }
            Ok(())
        }
    }
}

fn run_cc(command: CcCommand) -> CliResult {
    match command {
        CcCommand::Enumerate { n } => {
            let found = classical::enumerate_arithmetic(n);
            for q in &found {
                println!("{}", serde_json::to_string(q)?);
            }
            eprintln!("count: {}", found.len());
            Ok(())
        }
        CcCommand::Gen { quiddity, depth } => {
            let q = read_quiddity(&quiddity)?;
            let w = classical::window(&q, depth);
            for r in -1..depth as i64 {
                let row: Vec<String> =
                    w.row(r).unwrap().iter().map(Rat::to_string).collect();
                println!("{}", row.join(","));
            }
            Ok(())
        }
        CcCommand::Check { quiddity } => {
            let q = read_quiddity(&quiddity)?;
            let closed = classical::is_closed(&q);
            println!("closed: {closed}");
            if classical::is_periodic_identity(&q) {
                println!("note: monodromy is +Id (periodic, not closed)");
            }
            if closed {
                println!("width: {}", q.n() - 3);
                println!("positive: {}", classical::band_is_positive(&q));
            }
            Ok(())
        }
        CcCommand::FromTriangulation { n, diagonals } => {
            let diags: Vec<(usize, usize)> = diagonals
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| -> Result<(usize, usize), Box<dyn std::error::Error>> {
                    let (a, b) = s
                        .trim()
                        .split_once('-')
                        .ok_or_else(|| format!("bad diagonal {s:?}, expected a-b"))?;
                    Ok((a.trim().parse()?, b.trim().parse()?))
                })
                .collect::<Result<_, _>>()?;
            let t = classical::Triangulation::new(n, diags)?;
            let q = classical::from_triangulation(&t)?;
            println!("{}", serde_json::to_string(&io::quiddity_to_json(&q))?);
            Ok(())
        }
    }
}

fn read_quiddity(path: &PathBuf) -> Result<classical::ClassicalFrieze, Box<dyn std::error::Error>> {
    let text = fs::read_to_string(path)?;
    let json: io::QuiddityJson = serde_json::from_str(&text)?;
    Ok(io::quiddity_from_json(&json)?)
}

fn render_matrix(m: &frieze::MatExact) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let cells: Vec<String> = (0..m.cols()).map(|c| m.at(r, c).to_string()).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect();
    format!("[{}]", rows.join(", "))
}
