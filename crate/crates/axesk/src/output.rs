use std::str::FromStr;

use num_bigint::BigUint;
use serde_json::{Map, Number, Value};

use axes_core::charzero::GradedDimensionAnswer;
use axes_core::homology::{Coefficients, ModuleDescriptor, SummandHomology};
use axes_core::witt::{FiniteAbelianGroup, SymbolicGroupSum};

use crate::errors::CliError;

/// One fully assembled response: the echoed query, the computed result,
/// and an optional independent verification block.
pub struct Document {
    pub query: Value,
    pub result: Value,
    pub verification: Option<Value>,
}

/// Canonical pretty form: keys sorted, integers exact, no trailing
/// whitespace. The caller appends the final newline.
pub fn render_document(document: &Document) -> String {
    let mut root = Map::new();
    root.insert("query".to_string(), document.query.clone());
    root.insert("result".to_string(), document.result.clone());
    root.insert("schema_version".to_string(), Value::String("1".to_string()));
    if let Some(verification) = &document.verification {
        root.insert("verification".to_string(), verification.clone());
    }
    serde_json::to_string_pretty(&Value::Object(root)).expect("document serializes")
}

pub fn render_error(error: &CliError) -> String {
    let mut inner = Map::new();
    inner.insert(
        "category".to_string(),
        Value::String(error.category().to_string()),
    );
    inner.insert("message".to_string(), Value::String(error.to_string()));
    let mut root = Map::new();
    root.insert("error".to_string(), Value::Object(inner));
    serde_json::to_string_pretty(&Value::Object(root)).expect("error serializes")
}

/// Exact integer literal; the arbitrary-precision backing keeps every
/// digit instead of rounding through a float.
pub fn big_uint_value(value: &BigUint) -> Value {
    Value::Number(Number::from_str(&value.to_string()).expect("integer literal"))
}

pub fn symbolic_value(sum: &SymbolicGroupSum) -> Value {
    let terms = sum
        .terms()
        .iter()
        .map(|term| {
            let mut entry = Map::new();
            entry.insert(
                "multiplicity".to_string(),
                big_uint_value(&term.multiplicity),
            );
            entry.insert("witt_length".to_string(), Value::from(term.witt_length));
            Value::Object(entry)
        })
        .collect();
    let mut map = Map::new();
    map.insert("display".to_string(), Value::String(sum.to_string()));
    map.insert("terms".to_string(), Value::Array(terms));
    Value::Object(map)
}

pub fn concrete_value(group: &FiniteAbelianGroup) -> Value {
    let factors = group
        .factors()
        .iter()
        .map(|(modulus, multiplicity)| {
            let mut entry = Map::new();
            entry.insert("modulus".to_string(), big_uint_value(modulus));
            entry.insert("multiplicity".to_string(), big_uint_value(multiplicity));
            Value::Object(entry)
        })
        .collect();
    let mut map = Map::new();
    map.insert("display".to_string(), Value::String(group.to_string()));
    map.insert("factors".to_string(), Value::Array(factors));
    map.insert(
        "order".to_string(),
        group.order().as_ref().map_or(Value::Null, big_uint_value),
    );
    Value::Object(map)
}

/// Group in one degree: always symbolic, concretized only over a named
/// finite field. The display glues the two sides together.
pub fn group_fields(
    map: &mut Map<String, Value>,
    symbolic: &SymbolicGroupSum,
    concrete: Option<&FiniteAbelianGroup>,
) {
    let display = match concrete {
        Some(group) if !symbolic.is_trivial() => format!("{symbolic} ≅ {group}"),
        Some(_) => "0".to_string(),
        None => symbolic.to_string(),
    };
    map.insert("display".to_string(), Value::String(display));
    map.insert(
        "field".to_string(),
        Value::String(symbolic.field().to_string()),
    );
    map.insert("symbolic".to_string(), symbolic_value(symbolic));
    if let Some(group) = concrete {
        map.insert("concrete".to_string(), concrete_value(group));
    }
}

fn form_display(form_degree: u64, multiplicity: &BigUint) -> String {
    let base = if form_degree == 0 {
        "k".to_string()
    } else {
        format!("Ω^{form_degree}")
    };
    if *multiplicity == BigUint::from(1u32) {
        base
    } else if form_degree == 0 {
        format!("k^{multiplicity}")
    } else {
        format!("({base})^{multiplicity}")
    }
}

pub fn graded_display(answer: &GradedDimensionAnswer) -> String {
    let mut parts: Vec<String> = answer
        .summands
        .iter()
        .map(|summand| form_display(summand.form_degree, &summand.multiplicity))
        .collect();
    if let Some(axis) = &answer.infinite_axis_part {
        parts.push(format!(
            "[(HH_{})^{} for each i ≥ 1]",
            axis.form_degree, axis.copies_per_index
        ));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ⊕ ")
    }
}

pub fn graded_value(answer: &GradedDimensionAnswer) -> Value {
    let summands = answer
        .summands
        .iter()
        .map(|summand| {
            let mut entry = Map::new();
            entry.insert("form_degree".to_string(), Value::from(summand.form_degree));
            entry.insert(
                "multiplicity".to_string(),
                big_uint_value(&summand.multiplicity),
            );
            Value::Object(entry)
        })
        .collect();
    let axis = match &answer.infinite_axis_part {
        Some(axis) => {
            let mut entry = Map::new();
            entry.insert(
                "copies_per_index".to_string(),
                Value::from(axis.copies_per_index),
            );
            entry.insert("form_degree".to_string(), Value::from(axis.form_degree));
            Value::Object(entry)
        }
        None => Value::Null,
    };
    let mut map = Map::new();
    map.insert("degree".to_string(), Value::from(answer.degree));
    map.insert(
        "display".to_string(),
        Value::String(graded_display(answer)),
    );
    map.insert("infinite_axis_part".to_string(), axis);
    map.insert("summands".to_string(), Value::Array(summands));
    map.insert(
        "total_dimension".to_string(),
        answer
            .total_dimension
            .as_ref()
            .map_or(Value::Null, big_uint_value),
    );
    Value::Object(map)
}

pub fn coefficients_display(coefficients: Coefficients) -> String {
    match coefficients {
        Coefficients::Integers => "Z".to_string(),
        Coefficients::Field { characteristic } => format!("k (char {characteristic})"),
    }
}

pub fn module_value(descriptor: ModuleDescriptor, coefficients: Coefficients) -> Value {
    let mut map = Map::new();
    map.insert(
        "display".to_string(),
        Value::String(descriptor.render(coefficients)),
    );
    match descriptor {
        ModuleDescriptor::Zero => {
            map.insert("kind".to_string(), Value::String("zero".to_string()));
        }
        ModuleDescriptor::Free { rank } => {
            map.insert("kind".to_string(), Value::String("free".to_string()));
            map.insert("rank".to_string(), Value::from(rank));
        }
        ModuleDescriptor::CyclicOfOrderTwo => {
            map.insert(
                "kind".to_string(),
                Value::String("cyclic-of-order-two".to_string()),
            );
        }
    }
    Value::Object(map)
}

pub fn summand_homology_value(summand: &SummandHomology) -> Value {
    let coefficients = summand.coefficients();
    let mut degrees = Map::new();
    let mut parts = Vec::new();
    for (degree, module) in summand.degree_table() {
        degrees.insert(degree.to_string(), module_value(module, coefficients));
        parts.push(format!("H_{} = {}", degree, module.render(coefficients)));
    }
    let mut map = Map::new();
    map.insert(
        "coefficients".to_string(),
        Value::String(coefficients_display(coefficients)),
    );
    map.insert(
        "connes_multiplier".to_string(),
        Value::from(summand.connes_multiplier()),
    );
    map.insert("degrees".to_string(), Value::Object(degrees));
    map.insert("display".to_string(), Value::String(parts.join(", ")));
    map.insert(
        "homotopy".to_string(),
        Value::String(summand.homotopy().to_string()),
    );
    map.insert("length".to_string(), Value::from(summand.length()));
    map.insert("period".to_string(), Value::from(summand.period()));
    Value::Object(map)
}
