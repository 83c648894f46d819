//! The `graded-sl` command line: build gradings, verify them, report
//! dimensions and supports, coarsen, recover, and check the Type I
//! dimension obstruction.
//!
//! Groups are comma-separated factor lists (`2,2`), elements are
//! comma-separated exponent tuples (`1,0`), and lists of elements are
//! separated by `;` (for cyclic groups a plain comma list also works).
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad request, 3 parse
//! error.

pub mod json;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::cyclo::Mat;
use crate::error::{Error, Result};
use crate::groups::{quotient, FinAbGroup, GroupElem, GroupHom, Subgroup};
use crate::invol::{
    canonical_l6, elementary_involution_grading, involution_tensor, verify_involution_grading, Flavor,
    InvolutionGrading,
};
use crate::liegrad::{fine_outer, mixed_type2, recover_from_factor, type1, type1_obstruction, type2, verify_lie};
use crate::matalg::{
    coarsen, elementary_grading, epsilon_grading, tensor_grading, verify_assoc, GradingKind, VerificationReport,
};
use json::{grading_to_json, parse_grading_text, parse_rational, to_canonical_string, GradingFile};

#[derive(Parser, Debug)]
#[command(
    name = "graded-sl",
    version,
    about = "Exact gradings of M_n and sl(n) by finite abelian groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a grading and print it as JSON.
    Build(BuildArgs),
    /// Verify a grading file exhaustively.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        /// Expected kind: associative, lie or involution.
        #[arg(long)]
        kind: Option<String>,
    },
    /// Dimension of each component.
    Dims {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Support of a grading, one element per line.
    Support {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Factor grading by the subgroup generated by the given elements.
    Coarsen {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        subgroup: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Refine a factor grading by `G/<h>` to `G` with `X -> -Phi^{-1} tX Phi`.
    Recover {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        group: String,
        #[arg(long)]
        marker: String,
        /// Character exponents.
        #[arg(long = "char")]
        character: String,
        /// Form rows separated by `;`, entries rational.
        #[arg(long)]
        form: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Integer solutions of the Type I dimension equations.
    Obstruction {
        #[arg(long)]
        n: usize,
        /// Report every order from `n` up to this one.
        #[arg(long)]
        to: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BuildKind {
    Elementary,
    Epsilon,
    Tensor,
    InvolutionElementary,
    L6Case,
    InvolutionTensor,
    Type1,
    Type2,
    FineOuter,
    MixedType2,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[arg(value_enum)]
    what: BuildKind,
    #[arg(long)]
    group: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    tuple: Option<String>,
    /// One or more canonical 2x2 cases, comma separated.
    #[arg(long)]
    case: Option<String>,
    /// Element of order 2, or `ext` for a new Z2 factor (fine-outer).
    #[arg(long)]
    marker: Option<String>,
    #[arg(long = "in")]
    inputs: Vec<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// transpose or symplectic.
    #[arg(long, default_value = "transpose")]
    flavor: String,
    /// Number of swapped pairs of a transpose form.
    #[arg(long, default_value_t = 0)]
    pairs: usize,
    /// Images of the generators of the fine group, separated by `;`.
    #[arg(long)]
    embed: Option<String>,
}

/// Runs the command line on `args` (including the program name), writing
/// to `out` and `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let obj = json!({ "error": e.kind(), "message": e.to_string() });
            let _ = writeln!(err, "{obj}");
            match e {
                Error::Parse(_) => 3,
                _ => 2,
            }
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Build(b) => {
            let file = build(&b)?;
            emit(&file, b.out.as_deref(), out)?;
            Ok(0)
        }
        Command::Verify { input, kind } => {
            let file = read_grading(&input)?;
            if let Some(k) = kind {
                let want = GradingKind::parse(&k)?;
                if want != file.grading.kind() {
                    return Err(Error::KindMismatch(format!(
                        "file holds a {} grading, --kind asked for {}",
                        file.grading.kind(),
                        want
                    )));
                }
            }
            let report = verify_file(&file)?;
            write!(out, "{report}").map_err(io_err)?;
            if report.passed() {
                writeln!(out).map_err(io_err)?;
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Dims { input } => {
            let g = read_grading(&input)?.grading;
            for (e, d) in g.dims() {
                writeln!(out, "{e} {d}").map_err(io_err)?;
            }
            writeln!(out, "total {} expected {}", g.total_dim(), g.expected_dim()).map_err(io_err)?;
            Ok(0)
        }
        Command::Support { input } => {
            let g = read_grading(&input)?.grading;
            for e in g.support() {
                writeln!(out, "{e}").map_err(io_err)?;
            }
            Ok(0)
        }
        Command::Coarsen {
            input,
            subgroup,
            out: path,
        } => {
            let file = read_grading(&input)?;
            let group = file.grading.group().clone();
            let gens = parse_elems(&group, &subgroup)?;
            let h = Subgroup::generated(&group, &gens)?;
            let grading = coarsen(&file.grading, &h)?.without_labels();
            let result = GradingFile {
                grading,
                involution: file.involution,
                sign: None,
            };
            emit(&result, path.as_deref(), out)?;
            Ok(0)
        }
        Command::Recover {
            input,
            group,
            marker,
            character,
            form,
            out: path,
        } => {
            let factor = read_grading(&input)?.grading;
            let big = parse_group(&group)?;
            let h = parse_elem(&big, &marker)?;
            let phi = big.character(&parse_ints(&character)?)?;
            let form = parse_form(&form)?;
            let datum = crate::liegrad::OuterDatum::new(&h, &phi, &form)?;
            let sub = Subgroup::generated(&big, &[h])?;
            let q = quotient(&big, &sub)?;
            let grading = recover_from_factor(&factor, &q, &phi, &|x: &Mat| datum.apply(x))?;
            emit(&GradingFile::plain(grading), path.as_deref(), out)?;
            Ok(0)
        }
        Command::Obstruction { n, to } => {
            for k in n..=to.unwrap_or(n) {
                writeln!(out, "{}", type1_obstruction(k)).map_err(io_err)?;
            }
            Ok(0)
        }
    }
}

fn io_err(e: std::io::Error) -> Error {
    Error::Parse(format!("i/o: {e}"))
}

fn emit(file: &GradingFile, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let text = to_canonical_string(&grading_to_json(file));
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(io_err),
    }
}

fn read_grading(path: &Path) -> Result<GradingFile> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_grading_text(&text)
}

/// Exhaustive verification matching the kind recorded in the file.
pub fn verify_file(file: &GradingFile) -> Result<VerificationReport> {
    let g = &file.grading;
    Ok(match g.kind() {
        GradingKind::Associative => verify_assoc(g),
        GradingKind::Lie => verify_lie(g),
        GradingKind::Involution => {
            let inv = file
                .involution
                .as_ref()
                .ok_or_else(|| Error::KindMismatch("involution grading without a form".into()))?;
            verify_involution_grading(g, inv)
        }
    })
}

fn parse_ints(s: &str) -> Result<Vec<i64>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer {x:?}")))
        })
        .collect()
}

pub fn parse_group(s: &str) -> Result<FinAbGroup> {
    let f: Vec<u64> = parse_ints(s)?
        .into_iter()
        .map(|x| u64::try_from(x).map_err(|_| Error::InvalidGroup(format!("negative factor {x}"))))
        .collect::<Result<_>>()?;
    FinAbGroup::new(&f)
}

pub fn parse_elem(group: &FinAbGroup, s: &str) -> Result<GroupElem> {
    group.elem(&parse_ints(s)?)
}

/// Elements separated by `;`; for a cyclic group a single comma list is
/// read as one exponent per element.
pub fn parse_elems(group: &FinAbGroup, s: &str) -> Result<Vec<GroupElem>> {
    if group.rank() == 1 && !s.contains(';') {
        return parse_ints(s)?.into_iter().map(|x| group.elem(&[x])).collect();
    }
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| parse_elem(group, p))
        .collect()
}

fn parse_form(s: &str) -> Result<Mat> {
    let rows: Vec<Vec<crate::cyclo::CycNum>> = s
        .split(';')
        .map(|r| {
            r.split(',')
                .map(|x| Ok(crate::cyclo::CycNum::from_rational(parse_rational(x)?, 1)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("form must be square".into()));
    }
    Mat::from_entries(n, n, rows.into_iter().flatten().collect())
}

fn parse_cases(s: &str) -> Result<Vec<u8>> {
    parse_ints(s)?
        .into_iter()
        .map(|c| u8::try_from(c).map_err(|_| Error::InvalidCase(format!("case {c}"))))
        .collect()
}

fn parse_flavor(name: &str, pairs: usize) -> Result<Flavor> {
    match name {
        "transpose" => Ok(Flavor::Transpose { pairs }),
        "symplectic" => Ok(Flavor::Symplectic),
        other => Err(Error::Parse(format!("unknown flavor {other:?}"))),
    }
}

fn need<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref()
        .ok_or_else(|| Error::InvalidTuple(format!("--{flag} is required")))
}

fn inputs(b: &BuildArgs, count: usize) -> Result<Vec<GradingFile>> {
    if b.inputs.len() != count {
        return Err(Error::InvalidTuple(format!(
            "expected {count} --in file(s), got {}",
            b.inputs.len()
        )));
    }
    b.inputs.iter().map(|p| read_grading(p)).collect()
}

fn fine_group(k: usize) -> Result<FinAbGroup> {
    FinAbGroup::new(&vec![2; 2 * k])
}

/// The group, marker and fine embedding for fine-outer and mixed-type2.
fn fine_setup(b: &BuildArgs, k: usize) -> Result<(FinAbGroup, GroupElem, GroupHom)> {
    let marker = need(&b.marker, "marker")?;
    let source = fine_group(k)?;
    match (&b.group, marker) {
        (None, "ext") => {
            let g = source.direct_product(&FinAbGroup::cyclic(2)?);
            let images = (0..2 * k).map(|i| g.generator(i)).collect();
            let emb = GroupHom::new(&source, &g, images)?;
            let h = g.generator(2 * k);
            Ok((g, h, emb))
        }
        (None, m) => {
            let h = parse_elem(&source, m)?;
            Ok((source.clone(), h, GroupHom::identity(&source)))
        }
        (Some(gs), m) => {
            let g = parse_group(gs)?;
            let h = parse_elem(&g, m)?;
            let images = match &b.embed {
                Some(e) => parse_elems(&g, e)?,
                None if k == 0 => Vec::new(),
                None => return Err(Error::BadEmbedding("--embed is required with --group".into())),
            };
            Ok((g.clone(), h, GroupHom::new(&source, &g, images)?))
        }
    }
}

fn build(b: &BuildArgs) -> Result<GradingFile> {
    match b.what {
        BuildKind::Elementary => {
            let g = parse_group(need(&b.group, "group")?)?;
            let t = parse_elems(&g, need(&b.tuple, "tuple")?)?;
            Ok(GradingFile::plain(elementary_grading(&g, t.len(), &t)?))
        }
        BuildKind::Epsilon => {
            let n = b.n.ok_or_else(|| Error::InvalidOrder("--n is required".into()))?;
            Ok(GradingFile::plain(epsilon_grading(n)?.without_labels()))
        }
        BuildKind::Tensor => {
            let f = inputs(b, 2)?;
            for x in &f {
                if x.grading.kind() == GradingKind::Lie {
                    return Err(Error::KindMismatch("tensor products of Lie gradings".into()));
                }
            }
            Ok(GradingFile::plain(tensor_grading(&f[0].grading, &f[1].grading)?))
        }
        BuildKind::InvolutionElementary => {
            let g = parse_group(need(&b.group, "group")?)?;
            let t = parse_elems(&g, need(&b.tuple, "tuple")?)?;
            let flavor = parse_flavor(&b.flavor, b.pairs)?;
            Ok(GradingFile::from_involution(elementary_involution_grading(
                &g, &t, flavor,
            )?))
        }
        BuildKind::L6Case => {
            let c = parse_cases(need(&b.case, "case")?)?;
            if c.len() != 1 {
                return Err(Error::InvalidCase("l6-case takes exactly one case".into()));
            }
            Ok(GradingFile::from_involution(canonical_l6(c[0])?))
        }
        BuildKind::InvolutionTensor => {
            let parts = inputs(b, 2)?
                .iter()
                .map(GradingFile::involution_grading)
                .collect::<Result<Vec<InvolutionGrading>>>()?;
            Ok(GradingFile::from_involution(involution_tensor(&parts)?))
        }
        BuildKind::Type1 => {
            let f = inputs(b, 1)?;
            Ok(GradingFile::plain(type1(&f[0].grading)?))
        }
        BuildKind::Type2 => {
            let f = inputs(b, 1)?;
            let inv = f[0]
                .involution
                .as_ref()
                .ok_or_else(|| Error::NotInvolutionGrading("input carries no involution".into()))?;
            let h = parse_elem(f[0].grading.group(), need(&b.marker, "marker")?)?;
            Ok(GradingFile::plain(type2(&f[0].grading, inv, &h)?))
        }
        BuildKind::FineOuter => {
            let cases = parse_cases(need(&b.case, "case")?)?;
            if cases.is_empty() {
                return Err(Error::InvalidOrder("no fine factors".into()));
            }
            let (g, h, emb) = fine_setup(b, cases.len())?;
            Ok(GradingFile::plain(fine_outer(&cases, &g, &h, &emb)?.without_labels()))
        }
        BuildKind::MixedType2 => {
            let cases = match &b.case {
                Some(c) => parse_cases(c)?,
                None => Vec::new(),
            };
            let g = parse_group(need(&b.group, "group")?)?;
            let elem = match &b.tuple {
                Some(t) => {
                    let t = parse_elems(&g, t)?;
                    Some(elementary_involution_grading(
                        &g,
                        &t,
                        parse_flavor(&b.flavor, b.pairs)?,
                    )?)
                }
                None => None,
            };
            let (g, h, emb) = fine_setup(b, cases.len())?;
            Ok(GradingFile::plain(
                mixed_type2(elem.as_ref(), &cases, &g, &h, &emb)?.without_labels(),
            ))
        }
    }
}
