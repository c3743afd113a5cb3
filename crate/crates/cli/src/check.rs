use std::path::PathBuf;

use anyhow::Result;
use clap::ValueEnum;
use cyclehom::gadgets::{classify, Variant};
use cyclehom::graph::{girth, is_connected, is_in_gamma_p, is_pt_free, is_triangle_free, max_degree};

use crate::io;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VariantArg {
    Plain,
    Extension,
    List,
}

#[derive(clap::Args, Debug)]
pub struct CheckArgs {
    graph: PathBuf,
    /// Report P_t-freeness for each given t.
    #[arg(long = "t", default_values_t = [9])]
    ts: Vec<usize>,
    /// Report membership in Gamma_p for each given p.
    #[arg(long = "p")]
    ps: Vec<usize>,
    /// Classify C_k-coloring of F-free graphs with this graph as F.
    #[arg(long, requires = "variant")]
    k: Option<usize>,
    #[arg(long, value_enum, requires = "k")]
    variant: Option<VariantArg>,
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn run(a: &CheckArgs) -> Result<()> {
    let g = io::read_graph(&a.graph)?;
    println!("vertices={}", g.n());
    println!("edges={}", g.m());
    println!("connected={}", yes(is_connected(&g)));
    println!("trianglefree={}", yes(is_triangle_free(&g)));
    println!("girth={}", girth(&g).map_or("inf".to_string(), |x| x.to_string()));
    println!("maxdegree={}", max_degree(&g));
    for &t in &a.ts {
        println!("p{t}free={}", yes(is_pt_free(&g, t)));
    }
    for &p in &a.ps {
        if p > 0 {
            println!("gamma{p}={}", yes(is_in_gamma_p(&g, p)));
        }
    }
    if let (Some(k), Some(v)) = (a.k, a.variant) {
        let variant = match v {
            VariantArg::Plain => Variant::Plain,
            VariantArg::Extension => Variant::Extension,
            VariantArg::List => Variant::List,
        };
        println!("verdict={:?}", classify(&g, k, variant)?);
    }
    Ok(())
}
