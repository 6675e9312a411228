//! Command-line interface: root-system catalogs, alcove tables, folding,
//! the center action, fixed loci, prequantization reports, and component
//! counts, with table and JSON output. Exit codes: 0 on success, 2 on
//! usage or scope errors, 1 when `verify` finds a failing check.

mod verify;

use clap::{Parser, Subcommand};
use serde_json::json;

use alcove_core::alcove::Alcove;
use alcove_core::center::{
    center_elements, order, subgroup_generated, subgroup_of_order, vertex_permutation,
    weyl_element_for_center, CenterElement, FixedLocus, VertexPermutation,
};
use alcove_core::prequant::{report, ModuliQuery};
use alcove_core::rational::{rat_to_string, RatVec};
use alcove_core::reference::center_word;
use alcove_core::root_system::{RootSystem, SimpleType};
use alcove_core::weyl::{evaluate_word, fold_to_alcove};
use alcove_core::{center, Error};

#[derive(Parser)]
#[command(
    name = "alcove",
    about = "Exact computations with root systems, fundamental alcoves, the center action, \
             and prequantization of moduli of flat bundles",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root-system catalog for a simple type (e.g. A3, E6)
    Roots {
        type_name: String,
        #[arg(long)]
        json: bool,
    },
    /// Print the alcove vertices, keyed by the opposite simple or dominant root
    Alcove {
        type_name: String,
        #[arg(long)]
        json: bool,
    },
    /// Fold a rational point into the alcove and show the witness
    Fold {
        type_name: String,
        /// Comma-separated rational coordinates, e.g. "1,0,-1" or "3/2,-3/2"
        #[arg(long)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// Show the center action: permutations and distinguished Weyl elements
    Center {
        type_name: String,
        /// Restrict to the element of this special root index
        #[arg(long)]
        element: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Fixed locus of a center subgroup of the given order
    Fixed {
        type_name: String,
        /// Order of the subgroup
        #[arg(long)]
        nu: u64,
        /// Generator (special root index) when the order alone is ambiguous
        #[arg(long)]
        element: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Prequantization report for moduli of flat PU(p) bundles
    Prequant {
        /// Odd prime p: structure group PU(p)
        #[arg(long)]
        p: u64,
        /// Genus of the surface
        #[arg(long)]
        genus: u64,
        /// Level to test (omit to report the minimal admissible level)
        #[arg(long)]
        k: Option<u64>,
        /// Boundary class as a comma-separated rational point of su(p); repeatable
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Connected components of the moduli space, and the deck group order
    Components {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        genus: u64,
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Run the built-in verification suite (tables, words, permutations)
    Verify,
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn run(command: Command) -> Result<i32, Error> {
    match command {
        Command::Roots { type_name, json } => {
            let rs = parse_system(&type_name)?;
            if json {
                println!("{}", rs.to_json());
            } else {
                print_roots_table(&rs);
            }
        }
        Command::Alcove { type_name, json } => {
            let rs = parse_system(&type_name)?;
            let alc = Alcove::new(rs);
            if json {
                println!("{}", alcove_json(&alc));
            } else {
                print_alcove_table(&alc);
            }
        }
        Command::Fold {
            type_name,
            point,
            json,
        } => {
            let rs = parse_system(&type_name)?;
            let alc = Alcove::new(rs);
            let xi = RatVec::parse(&point)?;
            let fold = fold_to_alcove(&alc, &xi)?;
            if json {
                println!(
                    "{}",
                    json!({
                        "type": alc.root_system().simple_type().to_string(),
                        "input": xi.to_json(),
                        "folded": fold.point.cartesian().to_json(),
                        "barycentric": rat_list_json(fold.point.barycentric()),
                        "walls": fold.walls,
                        "witness": {
                            "matrix": fold.witness.linear().matrix().to_json(),
                            "translation": fold.witness.translation().to_json(),
                        },
                    })
                );
            } else {
                println!("input:       {xi}");
                println!("folded:      {}", fold.point.cartesian());
                println!("barycentric: {}", rat_tuple(fold.point.barycentric()));
                if fold.walls.is_empty() {
                    println!("walls applied: none (point already in the alcove)");
                } else {
                    let walls: Vec<String> =
                        fold.walls.iter().map(|w| w.to_string()).collect();
                    println!(
                        "walls applied: {} (0 is the highest-root wall)",
                        walls.join(" ")
                    );
                }
                println!("witness translation: {}", fold.witness.translation());
                println!("witness matrix:");
                for i in 0..fold.witness.linear().matrix().rows() {
                    println!("  {}", fold.witness.linear().matrix().row(i));
                }
            }
        }
        Command::Center {
            type_name,
            element,
            json,
        } => {
            let rs = parse_system(&type_name)?;
            let alc = Alcove::new(rs);
            let elements = select_elements(alc.root_system(), element)?;
            if json {
                println!("{}", center_json(&alc, &elements));
            } else {
                print_center_table(&alc, &elements);
            }
        }
        Command::Fixed {
            type_name,
            nu,
            element,
            json,
        } => {
            let rs = parse_system(&type_name)?;
            let alc = Alcove::new(rs);
            // A-series has the closed-form description; everything else goes
            // through the generic orbit-barycenter path.
            let locus = if element.is_none()
                && alc.root_system().simple_type().series() == alcove_core::Series::A
            {
                center::fixed_locus_su_n(alc.rank() + 1, nu as usize)?
            } else {
                let subgroup = fixed_subgroup(alc.root_system(), nu, element)?;
                center::fixed_locus(&alc, &subgroup)
            };
            if json {
                println!("{}", fixed_json(&alc, nu, &locus));
            } else {
                print_fixed_table(&alc, nu, &locus);
            }
        }
        Command::Prequant {
            p,
            genus,
            k,
            classes,
            json,
        } => {
            let points = parse_class_points(&classes)?;
            let query = ModuliQuery::new(p, genus, &points, k)?;
            let rep = report(&query);
            if json {
                println!("{}", rep.to_json());
            } else {
                print_prequant_table(&rep);
            }
        }
        Command::Components {
            p,
            genus,
            classes,
            json,
        } => {
            let points = parse_class_points(&classes)?;
            let query = ModuliQuery::new(p, genus, &points, None)?;
            let rep = report(&query);
            if json {
                println!(
                    "{}",
                    json!({
                        "p": p,
                        "genus": genus,
                        "components": rep.components,
                        "gamma_order": rep.gamma_order,
                    })
                );
            } else {
                println!("components = {}", rep.components);
                println!("|Gamma| = {}", rep.gamma_order);
            }
        }
        Command::Verify => {
            return Ok(if verify::run_verification() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn parse_system(name: &str) -> Result<RootSystem, Error> {
    Ok(RootSystem::new(name.parse::<SimpleType>()?))
}

fn parse_class_points(classes: &[String]) -> Result<Vec<RatVec>, Error> {
    classes.iter().map(|s| RatVec::parse(s)).collect()
}

fn select_elements(rs: &RootSystem, element: Option<usize>) -> Result<Vec<CenterElement>, Error> {
    match element {
        Some(i) => Ok(vec![CenterElement::new(rs, i)?]),
        None => Ok(center_elements(rs)
            .into_iter()
            .filter(|z| !z.is_identity())
            .collect()),
    }
}

/// Subgroup for `fixed`: by order when unique, by generator when given.
fn fixed_subgroup(
    rs: &RootSystem,
    nu: u64,
    element: Option<usize>,
) -> Result<Vec<CenterElement>, Error> {
    match element {
        Some(i) => {
            let z = CenterElement::new(rs, i)?;
            let subgroup = subgroup_generated(rs, &[z]);
            if subgroup.len() as u64 != nu {
                return Err(Error::NotADivisor {
                    what: "cyclic subgroup order from the chosen generator",
                    divisor: nu,
                    of: subgroup.len() as u64,
                });
            }
            Ok(subgroup)
        }
        None => subgroup_of_order(rs, nu),
    }
}

fn rat_tuple(values: &[alcove_core::Rat]) -> String {
    let parts: Vec<String> = values.iter().map(rat_to_string).collect();
    format!("({})", parts.join(", "))
}

fn rat_list_json(values: &[alcove_core::Rat]) -> serde_json::Value {
    serde_json::Value::Array(
        values
            .iter()
            .map(|r| serde_json::Value::String(rat_to_string(r)))
            .collect(),
    )
}

fn print_roots_table(rs: &RootSystem) {
    println!("type: {}", rs.simple_type());
    println!(
        "rank: {}, ambient dimension: {}",
        rs.rank(),
        rs.ambient_dim()
    );
    println!("dual Coxeter number: {}", rs.dual_coxeter());
    println!("center order: {}", rs.center_order());
    println!("basic inner product scale: {}", rs.basic_scale());
    println!("simple roots, marks, fundamental coweights:");
    for i in 1..=rs.rank() {
        println!(
            "  alpha_{i} = {}   m_{i} = {}   coweight_{i} = {}",
            rs.simple_root(i),
            rs.mark(i),
            rs.fundamental_coweight(i)
        );
    }
    println!("highest root = {}", rs.highest_root());
    let special: Vec<String> = rs
        .special_root_indices()
        .iter()
        .map(|i| i.to_string())
        .collect();
    if special.is_empty() {
        println!("special roots (mark 1): none (trivial center)");
    } else {
        println!("special roots (mark 1): {}", special.join(", "));
    }
}

fn print_alcove_table(alc: &Alcove) {
    let rs = alc.root_system();
    println!(
        "Alcove of {}: <xi, alpha_j> >= 0 (j = 1..{}), <xi, highest root> <= 1",
        rs.simple_type(),
        rs.rank()
    );
    println!();
    let mut rows: Vec<(String, String)> = Vec::new();
    for j in 1..=rs.rank() {
        rows.push((
            format!("alpha_{j} = {}", rs.simple_root(j)),
            format!("v{j} = {}", alc.vertex(j)),
        ));
    }
    rows.push((
        format!("highest = {}", rs.highest_root()),
        format!("v0 = {}", alc.vertex(0)),
    ));
    let width = rows
        .iter()
        .map(|(left, _)| left.len())
        .max()
        .unwrap_or(0)
        .max("Simple or dominant root".len());
    println!("{:width$} | Opposite vertex", "Simple or dominant root");
    for (left, right) in rows {
        println!("{left:width$} | {right}");
    }
}

fn alcove_json(alc: &Alcove) -> serde_json::Value {
    let mut vertices = serde_json::Map::new();
    for (j, v) in alc.vertices().iter().enumerate() {
        vertices.insert(format!("v{j}"), v.to_json());
    }
    json!({
        "type": alc.root_system().simple_type().to_string(),
        "vertices": serde_json::Value::Object(vertices),
    })
}

/// Cycle notation with vertex labels: `(v0 v1 v6)(v2 v3 v5)(v4)`.
fn vertex_cycles(perm: &VertexPermutation) -> String {
    perm.cycles()
        .iter()
        .map(|cycle| {
            let parts: Vec<String> = cycle.iter().map(|j| format!("v{j}")).collect();
            format!("({})", parts.join(" "))
        })
        .collect()
}

fn print_center_table(alc: &Alcove, elements: &[CenterElement]) {
    let rs = alc.root_system();
    println!(
        "center of {}: order {}",
        rs.simple_type(),
        rs.center_order()
    );
    if elements.is_empty() {
        println!("trivial center: no nonzero elements");
        return;
    }
    for &z in elements {
        let w = weyl_element_for_center(alc, z);
        println!();
        println!("element {z}:");
        println!("  coweight: {}", z.coweight(rs));
        println!("  order: {}", order(rs, z));
        println!(
            "  vertex permutation: {}",
            vertex_cycles(&vertex_permutation(alc, z))
        );
        println!(
            "  dynkin permutation: {}",
            center::dynkin_automorphism(alc, z)
        );
        match matching_reference_word(rs, z, &w) {
            Some(word) => {
                let letters: Vec<String> = word.iter().map(|i| format!("s{i}")).collect();
                println!("  weyl word (reference): {}", letters.join(" "));
            }
            None => println!("  weyl word (reference): none on file"),
        }
        println!("  weyl matrix:");
        for i in 0..w.matrix().rows() {
            println!("    {}", w.matrix().row(i));
        }
    }
}

/// The stored reference word, when it evaluates to exactly this element.
fn matching_reference_word(
    rs: &RootSystem,
    z: CenterElement,
    w: &alcove_core::WeylElement,
) -> Option<&'static [usize]> {
    let word = center_word(rs.simple_type(), z.special_index())?;
    let evaluated = evaluate_word(rs, word).ok()?;
    (&evaluated == w).then_some(word)
}

fn center_json(alc: &Alcove, elements: &[CenterElement]) -> serde_json::Value {
    let rs = alc.root_system();
    let list: Vec<serde_json::Value> = elements
        .iter()
        .map(|&z| {
            let w = weyl_element_for_center(alc, z);
            let vp = vertex_permutation(alc, z);
            let dp = center::dynkin_automorphism(alc, z);
            let mut v = json!({
                "special_index": z.special_index(),
                "coweight": z.coweight(rs).to_json(),
                "order": order(rs, z),
                "vertex_permutation": vertex_cycles(&vp),
                "vertex_mapping": vp.mapping(),
                "dynkin_mapping": dp.mapping(),
                "weyl_matrix": w.matrix().to_json(),
            });
            if let Some(word) = matching_reference_word(rs, z, &w) {
                v["reference_word"] = json!(word);
            }
            v
        })
        .collect();
    json!({
        "type": rs.simple_type().to_string(),
        "center_order": rs.center_order(),
        "elements": list,
    })
}

fn print_fixed_table(alc: &Alcove, nu: u64, locus: &FixedLocus) {
    let rs = alc.root_system();
    println!(
        "fixed locus of the order-{nu} subgroup of Z({}) on its alcove:",
        rs.simple_type()
    );
    for (orbit, generator) in locus.orbits().iter().zip(locus.generators()) {
        let labels: Vec<String> = orbit.iter().map(|j| format!("v{j}")).collect();
        println!(
            "  orbit {{{}}} -> barycentric {}, cartesian {}",
            labels.join(", "),
            rat_tuple(generator.barycentric()),
            generator.cartesian()
        );
    }
    println!(
        "locus = convex hull of {} generator(s), dimension {}",
        locus.generators().len(),
        locus.generators().len() - 1
    );
}

fn fixed_json(alc: &Alcove, nu: u64, locus: &FixedLocus) -> serde_json::Value {
    json!({
        "type": alc.root_system().simple_type().to_string(),
        "nu": nu,
        "orbits": locus.orbits(),
        "generators": locus.generators().iter().map(|g| json!({
            "barycentric": rat_list_json(g.barycentric()),
            "cartesian": g.cartesian().to_json(),
        })).collect::<Vec<_>>(),
    })
}

fn print_prequant_table(rep: &alcove_core::PrequantReport) {
    println!(
        "PU({}) moduli query: genus {}, {} class(es)",
        rep.p,
        rep.genus,
        rep.classes.len()
    );
    match (rep.genus, rep.condition_i_satisfied) {
        (0, _) => println!("condition (i): vacuous at genus 0"),
        (_, None) => println!("condition (i): requires k in {}N", rep.condition_i_required),
        (_, Some(ok)) => println!(
            "condition (i): requires k in {}N -> {}",
            rep.condition_i_required,
            pass_fail(ok)
        ),
    }
    for (idx, c) in rep.classes.iter().enumerate() {
        let verdict = match c.satisfied {
            Some(ok) => format!(" -> {}", pass_fail(ok)),
            None => String::new(),
        };
        println!(
            "class {}: xi = {}, min level {}, stabilizer order {}{verdict}",
            idx + 1,
            c.xi,
            c.min_level,
            c.stabilizer_order
        );
    }
    println!("k_min = {}", rep.k_min);
    if let (Some(k), Some(ok)) = (rep.level, rep.prequantizable) {
        println!("level k = {k}: {}", if ok { "prequantizable" } else { "not prequantizable" });
    }
    println!("components = {}, |Gamma| = {}", rep.components, rep.gamma_order);
    println!("caveat: {}", rep.caveat);
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}
