//! Command-line interface.
//!
//! Exit codes: 0 on success, 1 when a cross-check or verification fails
//! (`pair`/`antipode` disagreement, any `FAIL` line from `verify`), 2 on
//! usage or parse errors. All numeric output is exact; rationals print as
//! `p/q`. Table and diagram output is byte-stable across runs.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{
    antipode_left_cut, antipode_recursive, coproduct, parse_element, reduced_coproduct, Element,
};
use crate::forest::{enumerate_forests, parse_forest, Forest};
use crate::pairing::{
    dual_basis_via_gram, gram_matrix, pairing_bijection, pairing_recursive, pairing_tamari,
};
use crate::tamari::{
    build_poset, dual_basis_via_mobius, dual_product, eta, eta_inverse, forest_in_dual_basis,
    m_involution, parse_binary_tree, IndexSet,
};
use crate::verify::{run_suite, Suite};
use crate::Result;

#[derive(Parser)]
#[command(
    name = "infhopf",
    version,
    about = "The infinitesimal Hopf algebra of planar rooted forests",
    long_about = "Computes in the infinitesimal Hopf algebra of planar rooted forests: \
                  coproducts, antipodes, the non-degenerate pairing, Gram matrices, the \
                  forest partial orders with their Möbius functions, and the dual basis.\n\n\
                  Forests are written in nested-bracket form: `[]` is the single vertex, \
                  `[[][]]` a root with two children, `[] [[]]` a two-tree forest, `1` the \
                  empty forest. Elements are linear combinations such as \
                  \"2*[[]] - 1/3*[] []\". Binary trees are written with `.` for a leaf \
                  and `(lr)` for grafting, e.g. `((..).)`."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all forests of the given weight in canonical order, one per line
    Enumerate {
        /// Number of vertices
        #[arg(long)]
        weight: usize,
        /// Restrict to single-tree forests
        #[arg(long)]
        trees_only: bool,
    },
    /// Coproduct of an element, as a sum of `F (x) G` terms
    Coproduct {
        /// Element, e.g. "1*[[]] - 2*[] []"
        element: String,
        /// Reduced coproduct (element must have zero counit)
        #[arg(long)]
        reduced: bool,
    },
    /// Antipode of an element
    Antipode {
        /// Element, e.g. "[[]]"
        element: String,
        /// Algorithm; `both` cross-checks the two and reports AGREE/DISAGREE
        #[arg(long, value_enum, default_value_t = AntipodeMethod::Both)]
        method: AntipodeMethod,
    },
    /// Pairing of two forests
    Pair {
        /// Left forest
        left: String,
        /// Right forest
        right: String,
        /// Algorithm; `all` cross-checks the three and reports AGREE/DISAGREE
        #[arg(long, value_enum, default_value_t = PairMethod::All)]
        method: PairMethod,
    },
    /// Gram matrix of the pairing on the forests of one weight
    Gram {
        /// Number of vertices
        #[arg(long)]
        weight: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Dual-basis element f_F in the forest basis
    Dual {
        /// Forest F, e.g. "[[]]"
        #[arg(long)]
        forest: String,
        /// Möbius inversion or Gram-matrix inversion
        #[arg(long, value_enum, default_value_t = DualMethod::Mobius)]
        method: DualMethod,
    },
    /// Product of dual-basis elements, as a sum of dual-basis elements
    DualProduct {
        /// Nonempty factor forests, leftmost first
        #[arg(required = true, num_args = 1..)]
        factors: Vec<String>,
    },
    /// Express a forest as a sum of dual-basis elements
    Express {
        /// Forest to expand
        #[arg(long)]
        forest: String,
    },
    /// Covering relations of the forest poset of one weight
    Hasse {
        /// Number of vertices
        #[arg(long)]
        weight: usize,
        /// Allowed move indices, comma separated; all indices if omitted
        #[arg(long, value_delimiter = ',')]
        indices: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = HasseFormat::Text)]
        format: HasseFormat,
    },
    /// Möbius matrix of the full forest poset of one weight, as CSV
    Mobius {
        /// Number of vertices
        #[arg(long)]
        weight: usize,
    },
    /// Image of a binary tree under the bijection onto forests
    Eta {
        /// Binary tree, e.g. "((..).)"
        tree: String,
    },
    /// Preimage of a forest under the bijection from binary trees
    EtaInv {
        /// Forest, e.g. "[[]] []"
        forest: String,
    },
    /// Mirror involution of a forest
    Mirror {
        /// Forest to mirror
        forest: String,
    },
    /// Run the invariant checks and print one PASS/FAIL line per check
    Verify {
        /// Largest weight swept by the unclipped checks
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AntipodeMethod {
    Recursive,
    Leftcut,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PairMethod {
    Bijection,
    Recursive,
    Tamari,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DualMethod {
    Mobius,
    Gram,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum HasseFormat {
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Coalgebra,
    Antipode,
    Pairing,
    Poset,
    Dual,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Coalgebra => Suite::Coalgebra,
            SuiteArg::Antipode => Suite::Antipode,
            SuiteArg::Pairing => Suite::Pairing,
            SuiteArg::Poset => Suite::Poset,
            SuiteArg::Dual => Suite::Dual,
        }
    }
}

/// Parses `argv` (including the program name), runs the command, and
/// returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests land here too; keep their code 0
            let code = if e.exit_code() == 0 { 0 } else { 2 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Enumerate { weight, trees_only } => {
            for f in enumerate_forests(weight).iter() {
                if trees_only && f.tree_count() != 1 {
                    continue;
                }
                println!("{f}");
            }
        }
        Command::Coproduct { element, reduced } => {
            let x = parse_element(&element)?;
            if reduced {
                println!("{}", reduced_coproduct(&x)?);
            } else {
                println!("{}", coproduct(&x));
            }
        }
        Command::Antipode { element, method } => {
            let x = parse_element(&element)?;
            match method {
                AntipodeMethod::Recursive => println!("{}", antipode_recursive(&x)),
                AntipodeMethod::Leftcut => println!("{}", antipode_left_cut(&x)),
                AntipodeMethod::Both => {
                    let recursive = antipode_recursive(&x);
                    let leftcut = antipode_left_cut(&x);
                    println!("recursive: {recursive}");
                    println!("leftcut: {leftcut}");
                    if recursive == leftcut {
                        println!("AGREE");
                    } else {
                        println!("DISAGREE");
                        return Ok(1);
                    }
                }
            }
        }
        Command::Pair { left, right, method } => {
            let f = parse_forest(&left)?;
            let g = parse_forest(&right)?;
            let recursive =
                || pairing_recursive(&Element::basis(f.clone()), &Element::basis(g.clone()));
            match method {
                PairMethod::Bijection => println!("{}", pairing_bijection(&f, &g)),
                PairMethod::Recursive => println!("{}", recursive()),
                PairMethod::Tamari => println!("{}", pairing_tamari(&f, &g)),
                PairMethod::All => {
                    let b = pairing_bijection(&f, &g);
                    let r = recursive();
                    let t = pairing_tamari(&f, &g);
                    println!("bijection: {b}");
                    println!("recursive: {r}");
                    println!("tamari: {t}");
                    if b == r && r == t {
                        println!("AGREE");
                    } else {
                        println!("DISAGREE");
                        return Ok(1);
                    }
                }
            }
        }
        Command::Gram { weight, format } => {
            let gram = gram_matrix(weight);
            match format {
                TableFormat::Csv => print!("{}", gram.to_csv()),
                TableFormat::Json => println!("{}", gram.to_json()),
            }
        }
        Command::Dual { forest, method } => {
            let f = parse_forest(&forest)?;
            let dual = match method {
                DualMethod::Mobius => dual_basis_via_mobius(&f),
                DualMethod::Gram => dual_basis_via_gram(f.weight())?
                    .into_iter()
                    .find(|(g, _)| *g == f)
                    .map(|(_, e)| e)
                    .expect("every forest appears at its weight"),
            };
            println!("{dual}");
        }
        Command::DualProduct { factors } => {
            let factors = factors
                .iter()
                .map(|s| parse_forest(s))
                .collect::<Result<Vec<Forest>>>()?;
            println!("{}", dual_sum(&dual_product(&factors)?));
        }
        Command::Express { forest } => {
            let f = parse_forest(&forest)?;
            let mut sum = Element::zero();
            for g in forest_in_dual_basis(&f) {
                sum.add_term(g, crate::rat_one());
            }
            println!("{}", dual_sum(&sum));
        }
        Command::Hasse { weight, indices, format } => {
            let index_set = match indices {
                None => IndexSet::All,
                Some(list) => IndexSet::subset(list),
            };
            let poset = build_poset(weight, &index_set);
            match format {
                HasseFormat::Dot => print!("{}", poset.to_dot()),
                HasseFormat::Text => {
                    let elements = poset.elements();
                    for (lower, upper, label) in poset.covers() {
                        println!("{} < {}  [{label}]", elements[*lower], elements[*upper]);
                    }
                }
            }
        }
        Command::Mobius { weight } => {
            print!("{}", build_poset(weight, &IndexSet::All).mobius_csv());
        }
        Command::Eta { tree } => {
            println!("{}", eta(&parse_binary_tree(&tree)?));
        }
        Command::EtaInv { forest } => {
            println!("{}", eta_inverse(&parse_forest(&forest)?));
        }
        Command::Mirror { forest } => {
            println!("{}", m_involution(&parse_forest(&forest)?));
        }
        Command::Verify { max_weight, suite } => {
            let mut failed = false;
            for outcome in run_suite(suite.into(), max_weight) {
                match &outcome.counterexample {
                    None => println!("PASS {}", outcome.name),
                    Some(detail) => {
                        println!("FAIL {}: {detail}", outcome.name);
                        failed = true;
                    }
                }
            }
            if failed {
                return Ok(1);
            }
        }
    }
    Ok(0)
}

/// Renders an index-set sum `Σ f_G` as `f(G1) + f(G2) + …` in canonical
/// order; coefficients other than 1 (which the dual-basis products never
/// produce) are kept visible.
fn dual_sum(x: &Element) -> String {
    use num_traits::One;
    if x.is_zero() {
        return "0".to_owned();
    }
    x.iter()
        .map(|(g, c)| if c.is_one() { format!("f({g})") } else { format!("{c}*f({g})") })
        .collect::<Vec<_>>()
        .join(" + ")
}
