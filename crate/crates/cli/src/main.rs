use clap::{Args, Parser, Subcommand, ValueEnum};
use modtree::{
    common_intervals, factoring_permutation, fractures, generate, graph_from_json, graph_to_json, kernelize,
    md_tree_from_factperm, md_tree_skeleton, parse_edge_list, parse_edit_script, parse_instance, parse_permutations,
    recognize_cograph, solve_branching_with, strong_interval_tree, verify_md_tree, write_edge_list, write_instance,
    Cotree, Error, FactoringPermutation, Graph, MdTree, Permutation, Update, DEFAULT_GUARD,
};
use serde_json::json;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), " (format 1)");

#[derive(Parser)]
#[command(name = "modtree", version = VERSION, about = "Modular decomposition and friends")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Io {
    /// Input file; stdin when absent.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct PermIo {
    /// First permutation; `--in` may hold both on two lines instead.
    #[arg(long)]
    sigma: Option<PathBuf>,
    #[arg(long)]
    tau: Option<PathBuf>,
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Factperm,
    Skeleton,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Gnp,
    Cotree,
    Cluster,
}

#[derive(Subcommand)]
enum Cmd {
    /// Modular decomposition tree.
    Md {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum, default_value = "factperm")]
        algo: Algo,
        /// Cross-check both routes and verify the tree (n <= 64).
        #[arg(long)]
        paranoid: bool,
    },
    /// Tree through the vertex-spine construction.
    MdSkeleton {
        #[command(flatten)]
        io: Io,
    },
    /// Tree through a factoring permutation.
    MdFactperm {
        #[command(flatten)]
        io: Io,
    },
    /// Cotree, or an induced P4 with exit code 1.
    Cograph {
        #[command(flatten)]
        io: Io,
    },
    /// Replays an edit script on a cotree.
    Dynamic {
        #[command(flatten)]
        io: Io,
        /// Lines `+v id n1 ..`, `+e u v`, `-e u v`.
        #[arg(long)]
        script: PathBuf,
        /// Start from the empty cotree instead of reading a graph.
        #[arg(long)]
        empty: bool,
    },
    /// Factoring permutation, as a vertex order.
    Factperm {
        #[command(flatten)]
        io: Io,
    },
    /// Left and right fractures of a vertex order.
    Fractures {
        #[command(flatten)]
        io: Io,
        /// Vertex order (0-based); a factoring permutation by default.
        #[arg(long)]
        perm: Option<PathBuf>,
    },
    /// Common intervals of two permutations.
    Intervals {
        #[command(flatten)]
        io: PermIo,
    },
    /// Strong interval tree of two permutations.
    StrongTree {
        #[command(flatten)]
        io: PermIo,
    },
    /// Cluster-editing kernel of an instance.
    Kernel {
        #[command(flatten)]
        io: Io,
    },
    /// Exact cluster editing within budget `k`.
    SolveCe {
        #[command(flatten)]
        io: Io,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        /// Reduce first, then solve the kernel.
        #[arg(long)]
        kernelize: bool,
    },
    /// Seeded random graph.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge probability for `gnp`.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Checks a JSON tree against a graph.
    Verify {
        #[command(flatten)]
        io: Io,
        #[arg(long)]
        tree: PathBuf,
    },
}

enum Fail {
    /// Bad input or arguments: exit 2.
    Usage(String),
    /// A well-formed answer of "no", with its witness: exit 1.
    Rejected(String),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Out = Result<String, Fail>;

fn read(path: Option<&Path>) -> Result<String, Fail> {
    let mut s = String::new();
    match path {
        Some(p) => s = fs::read_to_string(p).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?,
        None => {
            io::stdin().read_to_string(&mut s).map_err(|e| Fail::Usage(format!("stdin: {e}")))?;
        }
    }
    Ok(s)
}

fn read_graph(path: Option<&Path>) -> Result<Graph, Fail> {
    let text = read(path)?;
    let g = if text.trim_start().starts_with('{') { graph_from_json(&text)? } else { parse_edge_list(&text)? };
    Ok(g)
}

fn nonempty(g: &Graph) -> Result<(), Fail> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    Ok(())
}

fn render_tree(t: &MdTree, f: Format) -> String {
    match f {
        Format::Json => t.to_json_string() + "\n",
        Format::Dot => t.to_dot(),
        Format::Text => t.to_text(),
    }
}

fn no_dot(f: Format) -> Result<(), Fail> {
    if f == Format::Dot {
        return Err(Fail::Usage("dot output is only available for trees".into()));
    }
    Ok(())
}

fn words(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn permutations(io: &PermIo) -> Result<(Permutation, Permutation), Fail> {
    let one = |p: &Path| -> Result<Permutation, Fail> {
        parse_permutations(&read(Some(p))?)?
            .into_iter()
            .next()
            .ok_or_else(|| Fail::Usage(format!("{}: no permutation", p.display())))
    };
    match (&io.sigma, &io.tau) {
        (Some(s), Some(t)) => Ok((one(s)?, one(t)?)),
        (None, None) => {
            let mut ps = parse_permutations(&read(io.input.as_deref())?)?;
            if ps.len() != 2 {
                return Err(Fail::Usage(format!("expected two permutations, found {}", ps.len())));
            }
            let t = ps.pop().unwrap();
            Ok((ps.pop().unwrap(), t))
        }
        _ => Err(Fail::Usage("give both --sigma and --tau".into())),
    }
}

fn run(cmd: Cmd) -> Out {
    match cmd {
        Cmd::Md { io, algo, paranoid } => {
            let g = read_graph(io.input.as_deref())?;
            nonempty(&g)?;
            let t = match algo {
                Algo::Factperm => modtree::md_tree(&g),
                Algo::Skeleton => md_tree_skeleton(&g),
            };
            if paranoid && g.n() <= 64 {
                let other = match algo {
                    Algo::Factperm => md_tree_skeleton(&g),
                    Algo::Skeleton => modtree::md_tree(&g),
                };
                if other != t {
                    return Err(Fail::Rejected("routes disagree".into()));
                }
                verify_md_tree(&g, &t).map_err(|v| Fail::Rejected(format!("verification failed: {v}")))?;
            }
            Ok(render_tree(&t, io.format))
        }
        Cmd::MdSkeleton { io } => {
            let g = read_graph(io.input.as_deref())?;
            nonempty(&g)?;
            Ok(render_tree(&md_tree_skeleton(&g), io.format))
        }
        Cmd::MdFactperm { io } => {
            let g = read_graph(io.input.as_deref())?;
            nonempty(&g)?;
            let t = md_tree_from_factperm(&g, &factoring_permutation(&g)).map_err(|e| Fail::Rejected(e.to_string()))?;
            Ok(render_tree(&t, io.format))
        }
        Cmd::Cograph { io } => {
            let g = read_graph(io.input.as_deref())?;
            nonempty(&g)?;
            match recognize_cograph(&g) {
                Ok(t) => Ok(render_tree(&t.to_md_tree()?, io.format)),
                Err(p) => Err(Fail::Rejected(format!("{p}"))),
            }
        }
        Cmd::Dynamic { io, script, empty } => {
            let mut t = if empty {
                Cotree::new()
            } else {
                let g = read_graph(io.input.as_deref())?;
                recognize_cograph(&g).map_err(|p| Fail::Rejected(format!("input is not a cograph: {p}")))?
            };
            let edits = parse_edit_script(&read(Some(&script))?)?;
            let mut out = String::new();
            let mut rejected = false;
            for (i, e) in edits.iter().enumerate() {
                match t.apply(e).map_err(|err| Fail::Usage(format!("edit {}: {err}", i + 1)))? {
                    Update::Done => {}
                    Update::Rejected(p) => {
                        rejected = true;
                        out.push_str(&format!("rejected {e}: {p}\n"));
                    }
                }
            }
            if t.vertex_count() > 0 {
                out.push_str(&render_tree(&t.to_md_tree()?, io.format));
            }
            if rejected {
                return Err(Fail::Rejected(out));
            }
            Ok(out)
        }
        Cmd::Factperm { io } => {
            no_dot(io.format)?;
            let g = read_graph(io.input.as_deref())?;
            let s = factoring_permutation(&g);
            Ok(match io.format {
                Format::Json => json!({ "order": s.order() }).to_string() + "\n",
                _ => words(s.order()) + "\n",
            })
        }
        Cmd::Fractures { io, perm } => {
            no_dot(io.format)?;
            let g = read_graph(io.input.as_deref())?;
            let s = match perm {
                Some(p) => {
                    let text = read(Some(&p))?;
                    let order: Vec<usize> = text
                        .split_whitespace()
                        .map(|t| t.parse().map_err(|_| Fail::Usage(format!("bad vertex {t:?} in order"))))
                        .collect::<Result<_, _>>()?;
                    if order.len() != g.n() {
                        return Err(Error::NotAPermutation(format!("{} entries for {} vertices", order.len(), g.n())).into());
                    }
                    FactoringPermutation::from_order(order)?
                }
                None => factoring_permutation(&g),
            };
            let fr = fractures(&g, &s);
            Ok(match io.format {
                Format::Json => {
                    let list: Vec<_> = fr.iter().map(|f| json!(f.to_string())).collect();
                    serde_json::Value::Array(list).to_string() + "\n"
                }
                _ => fr.iter().map(|f| format!("{f}\n")).collect(),
            })
        }
        Cmd::Intervals { io } => {
            no_dot(io.format)?;
            let (s, t) = permutations(&io)?;
            let c = common_intervals(&s, &t)?;
            Ok(match io.format {
                Format::Json => {
                    let list: Vec<_> = c.pairs().iter().map(|&(i, j)| json!([i + 1, j + 1])).collect();
                    serde_json::Value::Array(list).to_string() + "\n"
                }
                _ => c.to_text(),
            })
        }
        Cmd::StrongTree { io } => {
            no_dot(io.format)?;
            let (s, t) = permutations(&io)?;
            Ok(strong_interval_tree(&s, &t)?.to_text())
        }
        Cmd::Kernel { io } => {
            no_dot(io.format)?;
            let inst = parse_instance(&read(io.input.as_deref())?)?;
            let k = kernelize(&inst);
            let mut out: String = k.log.iter().map(|s| format!("# {s}\n")).collect();
            out.push_str(&format!("# kept {}\n", words(&k.kept)));
            out.push_str(&write_instance(&k.instance));
            Ok(out)
        }
        Cmd::SolveCe { io, guard, kernelize: reduce } => {
            no_dot(io.format)?;
            let mut inst = parse_instance(&read(io.input.as_deref())?)?;
            let mut kept: Vec<usize> = (0..inst.graph.n()).collect();
            if reduce {
                let k = kernelize(&inst);
                inst = k.instance;
                kept = k.kept;
            }
            let (sol, _) = solve_branching_with(&inst, guard)?;
            let sol = sol.ok_or_else(|| Fail::Rejected(format!("no solution with k = {}\n", inst.k)))?;
            let mut out = String::new();
            for e in &sol.0 {
                let (sign, u, v) = match *e {
                    modtree::PairEdit::Insert(u, v) => ('+', u, v),
                    modtree::PairEdit::Delete(u, v) => ('-', u, v),
                };
                out.push_str(&format!("{sign}{} {}\n", kept[u], kept[v]));
            }
            Ok(out)
        }
        Cmd::Gen { kind, n, seed, p, format } => {
            no_dot(format)?;
            let g = match kind {
                Kind::Gnp => generate::random_gnp(n, p, seed)?,
                Kind::Cotree => generate::random_cotree_graph(n, seed)?.0,
                Kind::Cluster => generate::random_cluster_graph(n, seed)?,
            };
            Ok(match format {
                Format::Json => graph_to_json(&g).to_string() + "\n",
                _ => write_edge_list(&g),
            })
        }
        Cmd::Verify { io, tree } => {
            let g = read_graph(io.input.as_deref())?;
            let t = MdTree::from_json(&read(Some(&tree))?)?;
            match verify_md_tree(&g, &t) {
                Ok(()) => Ok("ok\n".into()),
                Err(v) => Err(Fail::Rejected(format!("{v}\n"))),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(out) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Fail::Rejected(msg)) => {
            let _ = io::stdout().write_all(msg.as_bytes());
            if !msg.ends_with('\n') {
                println!();
            }
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
