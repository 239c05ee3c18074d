use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde_json::{Map, Value};

use axes_core::charzero::{self, HHProfile, HcAnswer};
use axes_core::homology::{self, Coefficients, ModuleDescriptor, SummandHomology};
use axes_core::tc::{self, DegreeParity, ParityClass};
use axes_core::witt::{FieldSpec, SymbolicGroupSum};
use axes_core::words::{self, Word};

use crate::errors::CliError;
use crate::output::{self, Document};
use crate::{Command, CycArgs, HcArgs, HomologyArgs, KArgs, SummandArgs, TcArgs};

pub fn run(command: Command, argv: Vec<String>) -> Result<Document, CliError> {
    let argv = Value::Array(argv.into_iter().map(Value::String).collect());
    match command {
        Command::Cyc(args) => cmd_cyc(args, argv),
        Command::K(args) => cmd_k(args, argv),
        Command::Tc(args) => cmd_tc(args, argv),
        Command::Summand(args) => cmd_summand(args, argv),
        Command::Homology(args) => cmd_homology(args, argv),
        Command::Hc(args) => cmd_hc(args, argv),
    }
}

fn query_object(argv: Value, command: &str, fields: &[(&str, Value)]) -> Value {
    let mut map = Map::new();
    map.insert("argv".to_string(), argv);
    map.insert("command".to_string(), Value::String(command.to_string()));
    for (key, value) in fields {
        if !value.is_null() {
            map.insert((*key).to_string(), value.clone());
        }
    }
    Value::Object(map)
}

fn require_axes(d: u64) -> Result<(), CliError> {
    if d == 0 {
        Err(CliError::invalid("at least one axis is required"))
    } else {
        Ok(())
    }
}

fn field_from(p: u64, n: Option<u32>) -> Result<FieldSpec, CliError> {
    Ok(match n {
        Some(degree) => FieldSpec::finite(p, degree)?,
        None => FieldSpec::symbolic(p)?,
    })
}

/// Enumeration work cap, overridable through AXESK_ENUM_BUDGET.
fn enum_budget() -> Result<u64, CliError> {
    match std::env::var("AXESK_ENUM_BUDGET") {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::invalid("AXESK_ENUM_BUDGET must be an unsigned integer")
        }),
        Err(std::env::VarError::NotPresent) => Ok(words::DEFAULT_ENUM_BUDGET),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err(CliError::invalid("AXESK_ENUM_BUDGET must be valid unicode"))
        }
    }
}

fn cmd_cyc(args: CycArgs, argv: Value) -> Result<Document, CliError> {
    require_axes(args.d)?;
    let query = query_object(
        argv,
        "cyc",
        &[
            ("d", Value::from(args.d)),
            ("s", args.s.map_or(Value::Null, Value::from)),
            ("table", args.table.map_or(Value::Null, Value::from)),
            (
                "verify",
                if args.verify { Value::Bool(true) } else { Value::Null },
            ),
        ],
    );
    let periods: Vec<u64> = match (args.s, args.table) {
        (Some(s), None) => {
            if s == 0 {
                return Err(CliError::invalid("the period must be at least 1"));
            }
            vec![s]
        }
        (None, Some(bound)) => {
            if bound == 0 {
                return Err(CliError::invalid("the table bound must be at least 1"));
            }
            (1..=bound).collect()
        }
        _ => unreachable!("clap enforces exactly one of --s and --table"),
    };
    let counts: Vec<BigUint> = periods
        .iter()
        .map(|&s| words::cyc_count(args.d, s))
        .collect();

    let verification = if args.verify {
        let alphabet = u8::try_from(args.d)
            .map_err(|_| CliError::invalid("enumeration supports at most 255 axes"))?;
        let budget = enum_budget()?;
        for (&s, count) in periods.iter().zip(&counts) {
            let orbits =
                words::enumerate_aperiodic_necklaces_with_budget(alphabet, s as usize, budget)?;
            if BigUint::from(orbits.len()) != *count {
                return Err(CliError::OracleMismatch(format!(
                    "enumeration found {} orbits of period {s}, formula gives {count}",
                    orbits.len()
                )));
            }
        }
        let mut map = Map::new();
        map.insert("matches".to_string(), Value::Bool(true));
        map.insert(
            "method".to_string(),
            Value::String("exhaustive-enumeration".to_string()),
        );
        map.insert("periods_checked".to_string(), Value::from(periods.len()));
        Some(Value::Object(map))
    } else {
        None
    };

    let result = if args.s.is_some() {
        let mut map = Map::new();
        map.insert("count".to_string(), output::big_uint_value(&counts[0]));
        Value::Object(map)
    } else {
        let rows = periods
            .iter()
            .zip(&counts)
            .map(|(&s, count)| {
                let mut row = Map::new();
                row.insert("count".to_string(), output::big_uint_value(count));
                row.insert("s".to_string(), Value::from(s));
                Value::Object(row)
            })
            .collect();
        let mut map = Map::new();
        map.insert("rows".to_string(), Value::Array(rows));
        Value::Object(map)
    };

    Ok(Document { query, result, verification })
}

fn cmd_k(args: KArgs, argv: Value) -> Result<Document, CliError> {
    require_axes(args.d)?;
    if args.p == 0 {
        if args.n.is_some() {
            return Err(CliError::invalid(
                "--n names a finite field and needs a positive characteristic",
            ));
        }
        let trdeg = args.trdeg.ok_or_else(|| {
            CliError::invalid("characteristic zero needs --trdeg for the base field")
        })?;
        let query = query_object(
            argv,
            "k",
            &[
                ("d", Value::from(args.d)),
                ("p", Value::from(0u64)),
                ("q", Value::from(args.q)),
                ("trdeg", Value::from(trdeg)),
            ],
        );
        let profile = HHProfile::IndSmoothField { transcendence_degree: trdeg };
        let answer = charzero::k_char_zero(args.q, args.d, &profile);
        return Ok(Document {
            query,
            result: output::graded_value(&answer),
            verification: None,
        });
    }
    if args.trdeg.is_some() {
        return Err(CliError::invalid(
            "--trdeg applies only to characteristic zero (--p 0)",
        ));
    }
    let field = field_from(args.p, args.n)?;
    let query = query_object(
        argv,
        "k",
        &[
            ("d", Value::from(args.d)),
            ("field", Value::String(field.to_string())),
            ("n", args.n.map_or(Value::Null, Value::from)),
            ("p", Value::from(args.p)),
            ("q", Value::from(args.q)),
        ],
    );
    let answer = tc::k_groups(args.p, args.d, args.q, &field)?;
    let mut result = Map::new();
    result.insert("degree".to_string(), Value::from(answer.degree));
    output::group_fields(&mut result, &answer.symbolic, answer.concrete.as_ref());
    Ok(Document { query, result: Value::Object(result), verification: None })
}

/// Same groups as `k`, assembled the other way round: the product of the
/// local contributions of each coprime pair rather than per-index table
/// lookups.
fn cmd_tc(args: TcArgs, argv: Value) -> Result<Document, CliError> {
    require_axes(args.d)?;
    if args.p == 0 {
        return Err(CliError::invalid(
            "tc needs a positive characteristic; degreewise it matches k in every one",
        ));
    }
    let field = field_from(args.p, args.n)?;
    let query = query_object(
        argv,
        "tc",
        &[
            ("d", Value::from(args.d)),
            ("field", Value::String(field.to_string())),
            ("n", args.n.map_or(Value::Null, Value::from)),
            ("p", Value::from(args.p)),
            ("q", Value::from(args.q)),
        ],
    );
    let indices = tc::decomposition_indices(args.p, args.d, args.q)?;
    let pairs: BTreeSet<(u64, u64)> = indices
        .iter()
        .map(|index| (index.m_prime(), index.s_prime()))
        .collect();
    let mut total = SymbolicGroupSum::trivial(field.clone());
    for (m_prime, s_prime) in pairs {
        let local = tc::tc_local(args.p, args.d, m_prime, s_prime, args.q, &field)?;
        for term in local.terms() {
            total.push_term(term.witt_length, term.multiplicity.clone());
        }
    }
    let concrete = match field.residue_degree() {
        Some(_) => Some(total.concretize()?),
        None => None,
    };
    let mut result = Map::new();
    result.insert("degree".to_string(), Value::from(args.q));
    output::group_fields(&mut result, &total, concrete.as_ref());
    Ok(Document { query, result: Value::Object(result), verification: None })
}

fn cmd_summand(args: SummandArgs, argv: Value) -> Result<Document, CliError> {
    let field = field_from(args.p, args.n)?;
    let class = ParityClass::classify(args.m, args.s).ok_or_else(|| {
        CliError::invalid("an odd-length orbit cannot have an even period")
    })?;
    let table_name = if args.tp { "tp" } else { "tcminus" };
    let query = query_object(
        argv,
        "summand",
        &[
            ("degree", Value::from(args.degree)),
            ("field", Value::String(field.to_string())),
            ("m", Value::from(args.m)),
            ("n", args.n.map_or(Value::Null, Value::from)),
            ("p", Value::from(args.p)),
            ("s", Value::from(args.s)),
            ("table", Value::String(table_name.to_string())),
        ],
    );
    let mut result = Map::new();
    result.insert("degree".to_string(), Value::from(args.degree));
    result.insert(
        "parity_class".to_string(),
        Value::String(class.to_string()),
    );
    let sum = if args.tp {
        let table = tc::tp_groups(args.m, args.s, &field, class)?;
        let parity = match table.parity() {
            DegreeParity::Even => "even",
            DegreeParity::Odd => "odd",
        };
        result.insert(
            "active_parity".to_string(),
            Value::String(parity.to_string()),
        );
        result.insert("witt_length".to_string(), Value::from(table.witt_length()));
        table.group_at(args.degree)
    } else {
        tc::tcminus_groups(args.m, args.s, &field, class, args.degree)?
    };
    let concrete = match field.residue_degree() {
        Some(_) => Some(sum.concretize()?),
        None => None,
    };
    output::group_fields(&mut result, &sum, concrete.as_ref());
    Ok(Document { query, result: Value::Object(result), verification: None })
}

fn parse_word(text: &str) -> Result<Word, CliError> {
    let rest = text
        .strip_prefix('x')
        .ok_or_else(|| CliError::invalid("words are spelled like x1x2x3"))?;
    let mut letters = Vec::new();
    for chunk in rest.split('x') {
        let letter: u8 = chunk
            .parse()
            .map_err(|_| CliError::invalid(format!("bad letter index {chunk:?} in word")))?;
        letters.push(letter);
    }
    let alphabet = letters.iter().copied().max().unwrap_or(0);
    Ok(Word::new(alphabet, letters)?)
}

fn module_matches(descriptor: ModuleDescriptor, pair: &axes_core::arith::PairHomology) -> bool {
    match descriptor {
        ModuleDescriptor::Zero => pair.free_rank == 0 && pair.torsion.is_empty(),
        ModuleDescriptor::Free { rank } => {
            pair.free_rank as u64 == rank && pair.torsion.is_empty()
        }
        ModuleDescriptor::CyclicOfOrderTwo => {
            pair.free_rank == 0 && pair.torsion == [BigUint::from(2u32)]
        }
    }
}

fn field_rank(descriptor: ModuleDescriptor, characteristic: u64) -> u64 {
    match descriptor {
        ModuleDescriptor::Zero => 0,
        ModuleDescriptor::Free { rank } => rank,
        ModuleDescriptor::CyclicOfOrderTwo => u64::from(characteristic == 2),
    }
}

/// Chain-level recount of everything the closed form claims: integral
/// homology by Smith reduction, mod-p dimensions, and the rotation
/// eigenvalue. Any disagreement is a hard error.
fn oracle_block(
    word: &Word,
    requested: &SummandHomology,
    characteristic: Option<u64>,
) -> Result<Value, CliError> {
    let length = word.len() as u64;
    let integral_closed =
        homology::closed_form_homology(length, requested.period(), Coefficients::Integers)?;
    let integral = homology::oracle_homology(word)?;
    let multiplier = homology::oracle_connes_multiplier(word)?;
    let mut consistent = multiplier == integral_closed.connes_multiplier();
    let mut integral_map = Map::new();
    for (&degree, pair) in &integral {
        consistent &= module_matches(integral_closed.module_at(degree as u64), pair);
        let top_two = degree as u64 + 1 >= length;
        if top_two || pair.free_rank > 0 || !pair.torsion.is_empty() {
            let torsion = pair.torsion.iter().map(output::big_uint_value).collect();
            let mut entry = Map::new();
            entry.insert("free_rank".to_string(), Value::from(pair.free_rank));
            entry.insert("torsion".to_string(), Value::Array(torsion));
            integral_map.insert(degree.to_string(), Value::Object(entry));
        }
    }
    let mut map = Map::new();
    map.insert("connes_multiplier".to_string(), Value::from(multiplier));
    map.insert("integral".to_string(), Value::Object(integral_map));
    if let Some(p) = characteristic.filter(|&p| p > 0) {
        let dims = homology::oracle_field_dimensions(word, p)?;
        let mut dim_map = Map::new();
        for (&degree, &dim) in &dims {
            consistent &= dim as u64 == field_rank(requested.module_at(degree as u64), p);
            if degree as u64 + 1 >= length || dim > 0 {
                dim_map.insert(degree.to_string(), Value::from(dim));
            }
        }
        map.insert("field_dimensions".to_string(), Value::Object(dim_map));
    }
    if !consistent {
        return Err(CliError::OracleMismatch(
            "the matrix oracle disagrees with the closed form".to_string(),
        ));
    }
    map.insert("consistent".to_string(), Value::Bool(true));
    Ok(Value::Object(map))
}

fn cmd_homology(args: HomologyArgs, argv: Value) -> Result<Document, CliError> {
    let coefficients = match args.characteristic {
        None => Coefficients::Integers,
        Some(characteristic) => Coefficients::Field { characteristic },
    };
    match &args.word {
        Some(text) => {
            let word = parse_word(text)?;
            if !word.has_no_cyclic_repetitions() {
                return Err(homology::HomologyError::WordHasRepetitions.into());
            }
            let canonical = words::canonicalize(&word);
            let query = query_object(
                argv,
                "homology",
                &[
                    (
                        "char",
                        args.characteristic.map_or(Value::Null, Value::from),
                    ),
                    ("word", Value::String(text.clone())),
                ],
            );
            let closed = homology::closed_form_homology(
                word.len() as u64,
                canonical.period() as u64,
                coefficients,
            )?;
            let oracle = oracle_block(&word, &closed, args.characteristic)?;
            let mut result = match output::summand_homology_value(&closed) {
                Value::Object(map) => map,
                _ => unreachable!("summand homology renders as an object"),
            };
            result.insert("oracle".to_string(), oracle);
            Ok(Document { query, result: Value::Object(result), verification: None })
        }
        None => {
            let (m, s) = match (args.m, args.s) {
                (Some(m), Some(s)) => (m, s),
                _ => unreachable!("clap requires --m and --s together"),
            };
            let query = query_object(
                argv,
                "homology",
                &[
                    (
                        "char",
                        args.characteristic.map_or(Value::Null, Value::from),
                    ),
                    ("m", Value::from(m)),
                    ("s", Value::from(s)),
                ],
            );
            let closed = homology::closed_form_homology(m, s, coefficients)?;
            Ok(Document {
                query,
                result: output::summand_homology_value(&closed),
                verification: None,
            })
        }
    }
}

fn cmd_hc(args: HcArgs, argv: Value) -> Result<Document, CliError> {
    require_axes(args.d)?;
    let query = query_object(
        argv,
        "hc",
        &[
            (
                "birelative",
                if args.birelative { Value::Bool(true) } else { Value::Null },
            ),
            ("d", Value::from(args.d)),
            ("q", Value::from(args.q)),
            ("trdeg", args.trdeg.map_or(Value::Null, Value::from)),
        ],
    );
    let result = match (args.trdeg, args.birelative) {
        (Some(trdeg), false) => {
            let profile = HHProfile::IndSmoothField { transcendence_degree: trdeg };
            match charzero::hc_relative(args.q, args.d, &profile) {
                HcAnswer::CoordinateRing => {
                    let mut map = Map::new();
                    map.insert("degree".to_string(), Value::from(0u64));
                    map.insert(
                        "display".to_string(),
                        Value::String("the coordinate ring itself".to_string()),
                    );
                    map.insert(
                        "special_case".to_string(),
                        Value::String("coordinate-ring".to_string()),
                    );
                    Value::Object(map)
                }
                HcAnswer::Graded(answer) => output::graded_value(&answer),
            }
        }
        (None, true) => {
            output::graded_value(&charzero::hc_birelative(args.q, args.d, &HHProfile::Symbolic))
        }
        _ => unreachable!("clap enforces exactly one of --trdeg and --birelative"),
    };
    Ok(Document { query, result, verification: None })
}
