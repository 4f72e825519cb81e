//! Subcommands and their JSON documents.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use frobkit::epsilon::{oracle_nilpotency, oracle_stable_submodules, oracle_theta_injective, WindowedModule};
use frobkit::epsilon::{DEFAULT_DIMENSION_CAP, DEFAULT_WINDOW};
use frobkit::splitcompat::{
    compatible_closure, enumerate_compatible, is_compatible, is_compatible_direct, splitting_injectivity,
    EnumerationConstraint, DEFAULT_CLOSURE_CAP,
};
use frobkit::thetamod::{is_locally_full, DEFAULT_CHAIN_CAP};
use frobkit::{
    colon_ideal, frobenius_root, hom_set, ideal_intersection, trace, DegreeBound, MonomialOrder, NearSplitting,
    PolyMatrix, Polynomial, Ring, Submodule, ThetaPresentation, TruncationWindow,
};

use crate::session::{Binding, Session};

#[derive(Debug, Parser)]
#[command(name = "frobkit", version, about = "Frobenius actions on Artinian modules over F_p[x1..xd]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Session file with the ring and named bindings.
    #[arg(long, global = true)]
    pub session: Option<PathBuf>,
    /// Write the JSON document here instead of stdout.
    #[arg(long, global = true)]
    pub json_out: Option<PathBuf>,
    /// Bypass the on-disk Groebner basis cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Iteration or size cap for chains, closures and enumerations.
    #[arg(long, global = true)]
    pub cap: Option<u32>,
    /// Degree bound for semilinear solving.
    #[arg(long, global = true)]
    pub degree_bound: Option<u64>,
    /// Truncation window size s for inverse-polynomial oracles.
    #[arg(long, global = true)]
    pub window: Option<u32>,
    /// Frobenius exponent e.
    #[arg(short = 'e', long = "exponent", global = true)]
    pub e: Option<u32>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis of a submodule.
    Gb {
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
        #[arg(long, value_enum)]
        order: Option<OrderArg>,
    },
    /// Membership of a polynomial or column vector in a submodule.
    Member {
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
        #[arg(long)]
        element: String,
    },
    /// Colon ideal (I : J).
    Colon {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        by: String,
    },
    /// Intersection of two submodules.
    Intersect {
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
        #[arg(long)]
        with: String,
    },
    /// Frobenius bracket power W^[p^e].
    Bracket {
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
    },
    /// Frobenius root W^[1/p^e].
    Root {
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
    },
    /// Trace of a polynomial.
    Trace {
        #[arg(long)]
        poly: String,
    },
    /// Morphisms Ann I -> Ann J of the Frobenius structures uT and vT.
    SolveHom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        target: String,
        #[arg(long)]
        v: String,
    },
    /// Check that a presentation defines a Frobenius action.
    Validate {
        #[arg(long)]
        presentation: String,
    },
    /// The chain K_e dual to the images of Theta^e.
    Kchain {
        #[arg(long)]
        presentation: String,
    },
    /// Nilpotency order of Theta.
    Hsl {
        #[arg(long)]
        presentation: String,
    },
    /// Presentation of the nilpotent part.
    Nilpart {
        #[arg(long)]
        presentation: String,
    },
    /// Presentation of the stable part.
    Stablepart {
        #[arg(long)]
        presentation: String,
    },
    /// Compatibility of a submodule with a near-splitting.
    Compatible {
        #[arg(long)]
        splitting: String,
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
    },
    /// Smallest compatible submodule containing the given one.
    Closure {
        #[arg(long)]
        splitting: String,
        #[arg(long, visible_alias = "ideal")]
        submodule: String,
    },
    /// Compatible submodules: monomial ideals up to a degree, or a window search.
    Enumerate {
        #[arg(long)]
        splitting: String,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Nilpotency order by finite enumeration inside a window.
    OracleNilpotent {
        #[arg(long)]
        presentation: String,
    },
    /// Theta-stable submodules by finite enumeration inside a window.
    OracleSubmodules {
        #[arg(long)]
        presentation: String,
    },
    /// Injectivity of Theta = B^t T on E^n.
    Injectivity {
        #[arg(long)]
        splitting: String,
    },
    /// Print the session in canonical form.
    Fmt,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gb { .. } => "gb",
            Command::Member { .. } => "member",
            Command::Colon { .. } => "colon",
            Command::Intersect { .. } => "intersect",
            Command::Bracket { .. } => "bracket",
            Command::Root { .. } => "root",
            Command::Trace { .. } => "trace",
            Command::SolveHom { .. } => "solve-hom",
            Command::Validate { .. } => "validate",
            Command::Kchain { .. } => "kchain",
            Command::Hsl { .. } => "hsl",
            Command::Nilpart { .. } => "nilpart",
            Command::Stablepart { .. } => "stablepart",
            Command::Compatible { .. } => "compatible",
            Command::Closure { .. } => "closure",
            Command::Enumerate { .. } => "enumerate",
            Command::OracleNilpotent { .. } => "oracle-nilpotent",
            Command::OracleSubmodules { .. } => "oracle-submodules",
            Command::Injectivity { .. } => "injectivity",
            Command::Fmt => "fmt",
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CommandError {
    #[error("{0}")]
    Lib(#[from] frobkit::Error),
    #[error("{detail}")]
    Input { kind: &'static str, detail: String },
}

impl CommandError {
    fn unbound(what: &str, name: &str) -> CommandError {
        CommandError::Input {
            kind: "unbound-name",
            detail: format!("no {what} named '{name}'"),
        }
    }

    fn wrong_kind(name: &str, expected: &str, found: &str) -> CommandError {
        CommandError::Input {
            kind: "wrong-kind",
            detail: format!("'{name}' is a {found}, expected {expected}"),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CommandError::Lib(e) => e.kind(),
            CommandError::Input { kind, .. } => kind,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CommandError::Lib(e) if e.is_resource() => 2,
            _ => 1,
        }
    }
}

type CmdResult<T> = std::result::Result<T, CommandError>;

/// A JSON object whose keys are inserted in sorted order, so output is
/// canonical whether or not serde_json preserves insertion order.
pub fn object<I, K>(pairs: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    let mut pairs: Vec<(String, Value)> = pairs.into_iter().map(|(k, v)| (k.into(), v)).collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k, v);
    }
    Value::Object(map)
}

/// Serialize with every object's keys sorted, pretty-printed, newline-terminated.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(&canonical(value)).expect("json values serialize");
    s.push('\n');
    s
}

fn canonical(value: &Value) -> Value {
    match value {
        Value::Object(map) => object(map.iter().map(|(k, v)| (k.clone(), canonical(v)))),
        Value::Array(items) => Value::Array(items.iter().map(canonical).collect()),
        other => other.clone(),
    }
}

fn poly_json(f: &Polynomial) -> Value {
    Value::String(f.to_string())
}

fn vector_json(v: &[Polynomial]) -> Value {
    Value::Array(v.iter().map(poly_json).collect())
}

fn matrix_json(m: &PolyMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| vector_json(&m.row(i))).collect())
}

fn vectors_json(rank: usize, vectors: &[Vec<Polynomial>]) -> Value {
    if rank == 1 {
        Value::Array(vectors.iter().map(|v| poly_json(&v[0])).collect())
    } else {
        Value::Array(vectors.iter().map(|v| vector_json(v)).collect())
    }
}

/// A submodule as its reduced Groebner basis: polynomials for ideals, column
/// vectors otherwise.
fn submodule_json(w: &Submodule) -> Value {
    vectors_json(w.rank(), &w.basis().vectors())
}

fn coefficients_json(c: Option<Vec<Polynomial>>) -> Value {
    c.map(|c| vector_json(&c)).unwrap_or(Value::Null)
}

fn binding_json(b: &Binding) -> Value {
    match b {
        Binding::Poly(f) => poly_json(f),
        Binding::Ideal(gens) => vector_json(gens),
        Binding::Matrix(m) | Binding::Splitting(m) => matrix_json(m),
        Binding::Presentation { a, b } => object([("A", matrix_json(a)), ("B", matrix_json(b))]),
    }
}

fn ring_json(ring: &Ring) -> Value {
    object([
        ("p", json!(ring.p())),
        ("vars", json!(ring.var_names())),
        ("order", json!(ring.order().name())),
    ])
}

struct Context<'a> {
    session: &'a Session,
    cli: &'a Cli,
    inputs: Vec<(String, Value)>,
}

impl<'a> Context<'a> {
    fn binding(&mut self, arg: &str, what: &str, name: &str) -> CmdResult<&'a Binding> {
        let b = self.session.get(name).ok_or_else(|| CommandError::unbound(what, name))?;
        self.inputs.push((
            arg.to_string(),
            object([("name", json!(name)), ("value", binding_json(b))]),
        ));
        Ok(b)
    }

    fn submodule(&mut self, arg: &str, name: &str) -> CmdResult<Submodule> {
        let ring = &self.session.ring;
        match self.binding(arg, "submodule", name)? {
            Binding::Poly(f) => Ok(Submodule::ideal(ring, vec![f.clone()])?),
            Binding::Ideal(gens) => Ok(Submodule::ideal(ring, gens.clone())?),
            Binding::Matrix(m) | Binding::Splitting(m) => Ok(Submodule::image(m)),
            b => Err(CommandError::wrong_kind(name, "an ideal or matrix", b.kind())),
        }
    }

    fn poly(&mut self, arg: &str, name: &str) -> CmdResult<Polynomial> {
        match self.binding(arg, "polynomial", name)? {
            Binding::Poly(f) => Ok(f.clone()),
            b => Err(CommandError::wrong_kind(name, "a poly", b.kind())),
        }
    }

    fn vector(&mut self, arg: &str, name: &str) -> CmdResult<Vec<Polynomial>> {
        match self.binding(arg, "vector", name)? {
            Binding::Poly(f) => Ok(vec![f.clone()]),
            Binding::Matrix(m) if m.cols() == 1 => Ok(m.column(0)),
            b => Err(CommandError::wrong_kind(name, "a poly or one-column matrix", b.kind())),
        }
    }

    fn presentation(&mut self, arg: &str, name: &str) -> CmdResult<(PolyMatrix, PolyMatrix)> {
        match self.binding(arg, "presentation", name)? {
            Binding::Presentation { a, b } => Ok((a.clone(), b.clone())),
            b => Err(CommandError::wrong_kind(name, "a presentation", b.kind())),
        }
    }

    fn theta(&mut self, arg: &str, name: &str) -> CmdResult<ThetaPresentation> {
        let (a, b) = self.presentation(arg, name)?;
        Ok(ThetaPresentation::new(a, b)?)
    }

    fn splitting(&mut self, arg: &str, name: &str) -> CmdResult<NearSplitting> {
        match self.binding(arg, "splitting", name)? {
            Binding::Splitting(m) | Binding::Matrix(m) => Ok(NearSplitting::new(m.clone())?),
            b => Err(CommandError::wrong_kind(name, "a splitting or square matrix", b.kind())),
        }
    }

    fn exponent(&mut self) -> u32 {
        let e = self.cli.e.unwrap_or(1);
        self.inputs.push(("e".into(), json!(e)));
        e
    }

    fn cap(&mut self, default: u32) -> u32 {
        let cap = self.cli.cap.unwrap_or(default);
        self.inputs.push(("cap".into(), json!(cap)));
        cap
    }

    fn window(&mut self) -> CmdResult<TruncationWindow> {
        let s = self.cli.window.unwrap_or(DEFAULT_WINDOW);
        self.inputs.push(("window".into(), json!(s)));
        Ok(TruncationWindow::new(s)?)
    }
}

fn bool_all<I: IntoIterator<Item = frobkit::Result<bool>>>(items: I) -> CmdResult<bool> {
    for b in items {
        if !b? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Runs a command against a parsed session and builds the output document.
pub fn execute(cli: &Cli, session: &Session) -> CmdResult<Value> {
    let mut cx = Context {
        session,
        cli,
        inputs: vec![("ring".into(), ring_json(&session.ring))],
    };
    let ring: &Arc<Ring> = &session.ring;
    let (result, certificates): (Value, Value) = match &cli.command {
        Command::Gb { submodule, order } => {
            let mut w = cx.submodule("submodule", submodule)?;
            if let Some(order) = order {
                let order = match order {
                    OrderArg::Lex => MonomialOrder::Lex,
                    OrderArg::Grevlex => MonomialOrder::GrevLex,
                };
                cx.inputs.push(("order".into(), json!(order.name())));
                w = w.with_order(&ring.with_order(order));
            }
            let gb = w.basis();
            let lifts = gb
                .vectors()
                .iter()
                .map(|g| Ok(coefficients_json(w.lift(g)?)))
                .collect::<CmdResult<Vec<Value>>>()?;
            (
                submodule_json(&w),
                object([
                    ("buchberger_criterion", json!(gb.satisfies_buchberger_criterion())),
                    ("lifts", Value::Array(lifts)),
                ]),
            )
        }
        Command::Member { submodule, element } => {
            let w = cx.submodule("submodule", submodule)?;
            let v = cx.vector("element", element)?;
            let gb = w.basis().clone();
            match w.lift(&v)? {
                Some(c) => (json!(true), object([("coefficients", vector_json(&c))])),
                None => (json!(false), object([("normal_form", vector_json(&gb.reduce(&v)?))])),
            }
        }
        Command::Colon { ideal, by } => {
            let i = cx.submodule("ideal", ideal)?;
            let j = cx.submodule("by", by)?;
            let c = colon_ideal(&i, &j)?;
            let basis = c.basis().vectors();
            let products = basis.iter().flat_map(|f| {
                j.generators()
                    .iter()
                    .map(|g| i.contains_poly(&f[0].checked_mul(&g[0])?))
                    .collect::<Vec<_>>()
            });
            let inside = bool_all(products)?;
            (submodule_json(&c), object([("products_in_ideal", json!(inside))]))
        }
        Command::Intersect { submodule, with } => {
            let a = cx.submodule("submodule", submodule)?;
            let b = cx.submodule("with", with)?;
            let c = if a.rank() == 1 && b.rank() == 1 {
                ideal_intersection(&a, &b)?
            } else {
                a.intersect(&b)?
            };
            let both = a.contains_submodule(&c)? && b.contains_submodule(&c)?;
            (submodule_json(&c), object([("contained_in_both", json!(both))]))
        }
        Command::Bracket { submodule } => {
            let w = cx.submodule("submodule", submodule)?;
            let e = cx.exponent();
            let q = (ring.p() as u64).pow(e);
            (submodule_json(&w.bracket_power(e)?), object([("q", json!(q))]))
        }
        Command::Root { submodule } => {
            let w = cx.submodule("submodule", submodule)?;
            let e = cx.exponent();
            let r = frobenius_root(&w, e)?;
            let q = (ring.p() as u64).pow(e);
            let covers = r.bracket_power(e)?.contains_submodule(&w)?;
            (
                submodule_json(&r),
                object([("q", json!(q)), ("bracket_of_root_contains_input", json!(covers))]),
            )
        }
        Command::Trace { poly } => {
            let f = cx.poly("poly", poly)?;
            let corner = vec![ring.p() - 1; ring.nvars()];
            (poly_json(&trace(&f)), object([("p_basis_monomial", json!(corner))]))
        }
        Command::SolveHom { source, u, target, v } => {
            let i = cx.submodule("source", source)?;
            let u = cx.poly("u", u)?;
            let j = cx.submodule("target", target)?;
            let v = cx.poly("v", v)?;
            let bound = match cli.degree_bound {
                Some(d) => {
                    cx.inputs.push(("degree_bound".into(), json!(d)));
                    DegreeBound::Explicit(d)
                }
                None => DegreeBound::Automatic,
            };
            let h = hom_set(&i, &u, &j, &v, bound)?;
            (
                vector_json(&h.cosets),
                object([
                    ("count", json!(h.len())),
                    ("coset_basis", vector_json(&h.coset_basis)),
                    ("colon", submodule_json(&h.colon)),
                    ("degree_bound", json!(h.solutions.degree_bound())),
                    ("solution_basis", vector_json(h.solutions.basis())),
                ]),
            )
        }
        Command::Validate { presentation } => {
            let (a, b) = cx.presentation("presentation", presentation)?;
            match ThetaPresentation::new(a.clone(), b.clone()) {
                Ok(t) => {
                    let image = Submodule::image(&t.a().bracket_power(1)?);
                    let ba = t.b().checked_mul(t.a())?;
                    let lifts = ba
                        .columns()
                        .iter()
                        .map(|c| Ok(coefficients_json(image.lift(c)?)))
                        .collect::<CmdResult<Vec<Value>>>()?;
                    (
                        json!(true),
                        object([
                            ("alpha", json!(t.alpha())),
                            ("beta", json!(t.beta())),
                            ("lifts_of_ba_columns", Value::Array(lifts)),
                        ]),
                    )
                }
                Err(frobkit::Error::InvalidStructure(reason)) => (json!(false), object([("reason", json!(reason))])),
                Err(e) => return Err(e.into()),
            }
        }
        Command::Kchain { presentation } => {
            let t = cx.theta("presentation", presentation)?;
            let cap = cx.cap(DEFAULT_CHAIN_CAP);
            let chain = t.k_chain(cap)?;
            let full: Vec<bool> = chain.entries.iter().map(is_locally_full).collect();
            (
                Value::Array(chain.entries.iter().map(submodule_json).collect()),
                object([
                    ("locally_full", json!(full)),
                    ("stabilization_index", json!(chain.stabilization_index)),
                ]),
            )
        }
        Command::Hsl { presentation } => {
            let t = cx.theta("presentation", presentation)?;
            let cap = cx.cap(DEFAULT_CHAIN_CAP);
            let order = t.nilpotency_order(cap)?;
            let chain = t.k_chain(cap)?;
            (
                json!(order),
                object([
                    ("k_chain", Value::Array(chain.entries.iter().map(submodule_json).collect())),
                    ("stabilization_index", json!(chain.stabilization_index)),
                ]),
            )
        }
        Command::Nilpart { presentation } => {
            let t = cx.theta("presentation", presentation)?;
            let cap = cx.cap(DEFAULT_CHAIN_CAP);
            let chain = t.nil_chain(cap)?;
            (
                matrix_json(&t.nil_part(cap)?),
                object([("nil_chain", Value::Array(chain.iter().map(submodule_json).collect()))]),
            )
        }
        Command::Stablepart { presentation } => {
            let t = cx.theta("presentation", presentation)?;
            let cap = cx.cap(DEFAULT_CHAIN_CAP);
            let chain = t.k_chain(cap)?;
            (
                matrix_json(&t.stable_part(cap)?),
                object([
                    ("stable_k", submodule_json(chain.stable_value())),
                    ("stabilization_index", json!(chain.stabilization_index)),
                ]),
            )
        }
        Command::Compatible { splitting, submodule } => {
            let s = cx.splitting("splitting", splitting)?;
            let w = cx.submodule("submodule", submodule)?;
            let ok = is_compatible(&s, &w)?;
            let direct = is_compatible_direct(&s, &w)?;
            let bracket = w.bracket_power(1)?;
            let witnesses = w
                .generators()
                .iter()
                .map(|g| Ok(coefficients_json(bracket.lift(&s.matrix().mul_vector(g)?)?)))
                .collect::<CmdResult<Vec<Value>>>()?;
            (
                json!(ok),
                object([
                    ("root_route", json!(direct)),
                    ("bracket_lifts", Value::Array(witnesses)),
                ]),
            )
        }
        Command::Closure { splitting, submodule } => {
            let s = cx.splitting("splitting", splitting)?;
            let w = cx.submodule("submodule", submodule)?;
            let cap = cx.cap(DEFAULT_CLOSURE_CAP);
            let c = compatible_closure(&s, &w, cap)?;
            let contains = c.contains_submodule(&w)?;
            (
                submodule_json(&c),
                object([
                    ("compatible", json!(is_compatible(&s, &c)?)),
                    ("contains_input", json!(contains)),
                ]),
            )
        }
        Command::Enumerate { splitting, max_degree } => {
            let s = cx.splitting("splitting", splitting)?;
            let constraint = match max_degree {
                Some(d) => {
                    cx.inputs.push(("max_degree".into(), json!(d)));
                    EnumerationConstraint::Monomial { max_degree: *d }
                }
                None => {
                    let window = cx.window()?;
                    let cap = cx.cap(DEFAULT_DIMENSION_CAP as u32) as usize;
                    EnumerationConstraint::Window { window, cap }
                }
            };
            let report = enumerate_compatible(&s, constraint)?;
            let constraint = match report.constraint {
                EnumerationConstraint::Monomial { max_degree } => {
                    object([("kind", json!("monomial")), ("max_degree", json!(max_degree))])
                }
                EnumerationConstraint::Window { window, cap } => object([
                    ("kind", json!("window")),
                    ("window", json!(window.s())),
                    ("cap", json!(cap)),
                ]),
            };
            (
                Value::Array(report.submodules.iter().map(submodule_json).collect()),
                object([
                    ("constraint", constraint),
                    ("count", json!(report.submodules.len())),
                    ("zero_from_whole_module", json!(report.zero_from_whole_module)),
                ]),
            )
        }
        Command::OracleNilpotent { presentation } => {
            let (a, b) = cx.presentation("presentation", presentation)?;
            let window = cx.window()?;
            let e_max = cx.cap(DEFAULT_CHAIN_CAP);
            let module = WindowedModule::new(&a, &b, window)?;
            let order = oracle_nilpotency(&a, &b, window, e_max)?;
            (
                json!(order),
                object([
                    ("module_dimension", json!(module.dim())),
                    ("window_dimension", json!(window.dim(ring.nvars(), a.rows()).to_string())),
                    ("window_is_exhaustive", json!(module.window_is_exhaustive()?)),
                ]),
            )
        }
        Command::OracleSubmodules { presentation } => {
            let (a, b) = cx.presentation("presentation", presentation)?;
            let window = cx.window()?;
            let cap = cx.cap(DEFAULT_DIMENSION_CAP as u32) as usize;
            let found = oracle_stable_submodules(&b, &a, window, cap)?;
            let module = WindowedModule::new(&a, &b, window)?;
            let items = found
                .submodules
                .iter()
                .map(|w| {
                    Ok(object([
                        ("dim", json!(w.dim())),
                        ("annihilator", submodule_json(&w.annihilator_presentation()?)),
                    ]))
                })
                .collect::<CmdResult<Vec<Value>>>()?;
            (
                Value::Array(items),
                object([
                    ("count", json!(found.submodules.len())),
                    ("module_dimension", json!(module.dim())),
                    ("whole_module_outside_window", json!(found.whole_module_outside_window)),
                ]),
            )
        }
        Command::Injectivity { splitting } => {
            let s = cx.splitting("splitting", splitting)?;
            let window = cx.window()?;
            let injective = splitting_injectivity(&s)?;
            let oracle = oracle_theta_injective(s.matrix(), window)?;
            (json!(injective), object([("window_oracle", json!(oracle))]))
        }
        Command::Fmt => (json!(session.to_string()), object(Vec::<(String, Value)>::new())),
    };
    Ok(object([
        ("command", json!(cli.command.name())),
        ("inputs", object(cx.inputs)),
        ("result", result),
        ("certificates", certificates),
    ]))
}

pub fn error_document(kind: &str, detail: &str) -> Value {
    object([("error", json!(kind)), ("detail", json!(detail))])
}
