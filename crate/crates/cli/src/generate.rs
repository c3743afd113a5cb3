use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use cyclehom::gadgets::{
    build_chain_gadget, monotone3sat_to_listinstance, nae3sat_to_coloring, nonrainbow_to_extension, parse_dimacs,
    parse_hypergraph, reduce_degree, subdivide, subdivide_instance, FormulaKind, GadgetInstance, Metadata,
};
use cyclehom::graph::{write_graph, Graph};
use cyclehom::lists::write_lists;
use cyclehom::random;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Gadget {
    Subdivide,
    Chain,
    DegreeReduce,
    Nonrainbow,
    Nae,
    MonotoneList,
}

#[derive(clap::Args, Debug)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    gadget: Gadget,
    /// Output prefix: writes `<out>.graph`, `<out>.meta` and, for list or
    /// extension instances, `<out>.lists`.
    #[arg(long)]
    out: PathBuf,
    /// Source file: a graph, a DIMACS formula or a hypergraph. Without it a
    /// random source is drawn from `--seed`.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Target cycle length (chain, degree-reduce).
    #[arg(long)]
    k: Option<usize>,
    /// Half the cycle length: C_{2s+1} for odd constructions, C_{2s} for monotone-list.
    #[arg(long)]
    s: Option<usize>,
    /// Edges per subdivision path.
    #[arg(long)]
    m: Option<usize>,
    /// Chain length, or the connector spacing for nae.
    #[arg(long)]
    d: Option<usize>,
    /// Even girth parameter for monotone-list.
    #[arg(long, default_value_t = 4)]
    g: usize,
    /// Size of a random source: vertices or variables.
    #[arg(long, default_value_t = 6)]
    size: usize,
    /// Number of clauses or hyperedges of a random source.
    #[arg(long, default_value_t = 4)]
    items: usize,
}

fn need(v: Option<usize>, name: &str) -> Result<usize> {
    v.with_context(|| format!("--{name} is required for this gadget"))
}

pub fn run(a: &GenerateArgs) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let source_graph = |rng: &mut ChaCha8Rng| -> Result<Graph> {
        match &a.input {
            Some(p) => io::read_graph(p),
            None => Ok(random::connected_triangle_free(rng, a.size, 0.3)),
        }
    };
    let formula = |rng: &mut ChaCha8Rng, kind: FormulaKind| -> Result<cyclehom::gadgets::Formula> {
        match &a.input {
            Some(p) => Ok(parse_dimacs(&io::read_text(p)?, kind)?),
            None if kind == FormulaKind::Nae3 => Ok(random::nae_formula(rng, a.size.max(3), a.items)),
            None => Ok(random::monotone_formula(rng, a.size.max(3), a.items)),
        }
    };
    let inst = match a.gadget {
        Gadget::Subdivide => {
            let g = source_graph(&mut rng)?;
            let m = match (a.m, a.s) {
                (Some(m), _) => m,
                (None, Some(s)) if s >= 1 => 2 * s - 1,
                _ => bail!("subdivide needs --m or --s >= 1"),
            };
            if m >= 3 && m % 2 == 1 {
                subdivide_instance(&g, m.div_ceil(2))?
            } else {
                let out = subdivide(&g, m)?;
                let mut meta = Metadata::default();
                meta.set("construction", "subdivide");
                meta.set("path_edges", m);
                meta.set("source_vertices", g.n());
                meta.set("source_edges", g.m());
                meta.set("vertices", out.n());
                meta.set("edges", out.m());
                let k = a.k.unwrap_or(3);
                GadgetInstance { graph: out, k, lists: None, precoloring: Vec::new(), outputs: Vec::new(), metadata: meta }
            }
        }
        Gadget::Chain => build_chain_gadget(need(a.d, "d")?, need(a.k, "k")?)?,
        Gadget::DegreeReduce => reduce_degree(&source_graph(&mut rng)?, need(a.k, "k")?)?,
        Gadget::Nonrainbow => {
            let h = match &a.input {
                Some(p) => parse_hypergraph(&io::read_text(p)?)?,
                None => random::hypergraph(&mut rng, a.size.max(3), a.items),
            };
            nonrainbow_to_extension(&h, need(a.s, "s")?)?
        }
        Gadget::Nae => nae3sat_to_coloring(&formula(&mut rng, FormulaKind::Nae3)?, need(a.s, "s")?, a.d)?,
        Gadget::MonotoneList => monotone3sat_to_listinstance(&formula(&mut rng, FormulaKind::Monotone3)?, need(a.s, "s")?, a.g)?,
    };
    write_instance(&a.out, &inst)
}

fn with_ext(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn write_instance(prefix: &Path, inst: &GadgetInstance) -> Result<()> {
    io::emit(Some(&with_ext(prefix, "graph")), &write_graph(&inst.graph))?;
    if inst.lists.is_some() || !inst.precoloring.is_empty() {
        io::emit(Some(&with_ext(prefix, "lists")), &write_lists(&inst.effective_lists()))?;
    }
    let mut meta = inst.metadata.clone();
    meta.set("target", format!("C_{}", inst.k));
    if !inst.outputs.is_empty() {
        meta.set("outputs", format!("{:?}", inst.outputs));
    }
    io::emit(Some(&with_ext(prefix, "meta")), &meta.to_text())?;
    println!("{} vertices {} edges k {}", inst.graph.n(), inst.graph.m(), inst.k);
    Ok(())
}
