//! Browser bindings for a product/coproduct calculator and stalactic
//! insertion. The `*_text` functions hold the logic so they can be tested
//! natively; the exported wrappers only convert errors for JavaScript.

use hopfcomb::registry::{self, Options};
use wasm_bindgen::prelude::*;

fn basis(b: &str) -> Option<&str> {
    let b = b.trim();
    (!b.is_empty()).then_some(b)
}

/// Factors are separated by `;` or newlines.
fn factors(s: &str) -> Vec<&str> {
    s.split([';', '\n']).map(str::trim).filter(|t| !t.is_empty()).collect()
}

pub fn product_text(algebra: &str, basis_name: &str, elements: &str) -> Result<String, String> {
    let alg = registry::lookup(algebra.trim(), basis(basis_name), None).map_err(|e| e.to_string())?;
    alg.product(&factors(elements), &Options::default())
        .map(|r| r.text)
        .map_err(|e| e.to_string())
}

pub fn coproduct_text(algebra: &str, basis_name: &str, element: &str) -> Result<String, String> {
    let alg = registry::lookup(algebra.trim(), basis(basis_name), None).map_err(|e| e.to_string())?;
    alg.coproduct(&factors(element), &Options::default())
        .map(|r| r.text)
        .map_err(|e| e.to_string())
}

pub fn insert_text(word: &str) -> Result<String, String> {
    registry::insert(word, None).map(|r| r.text).map_err(|e| e.to_string())
}

/// `algebra basis` pairs, one per line.
#[wasm_bindgen]
pub fn algebras() -> String {
    registry::algebras()
        .into_iter()
        .map(|(a, b)| format!("{a} {b}"))
        .collect::<Vec<_>>()
        .join("\n")
}

#[wasm_bindgen]
pub fn product(algebra: &str, basis_name: &str, elements: &str) -> Result<String, JsValue> {
    product_text(algebra, basis_name, elements).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn coproduct(algebra: &str, basis_name: &str, element: &str) -> Result<String, JsValue> {
    coproduct_text(algebra, basis_name, element).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn stalactic_insert(word: &str) -> Result<String, JsValue> {
    insert_text(word).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calculator() {
        assert_eq!(product_text("eqsym", "M", "1; 22").unwrap(), "M[133] + M[223] + M[323]");
        assert_eq!(
            coproduct_text("phisym", "", "12").unwrap(),
            "1 ⊗ phi[12] + 2*phi[1] ⊗ phi[1] + phi[12] ⊗ 1"
        );
        assert!(product_text("nope", "", "1").unwrap_err().contains("unknown algebra"));
        assert!(insert_text("cabccdbdd").unwrap().starts_with("P = cccabbddd"));
        assert!(algebras().lines().any(|l| l == "fqsym-q F"));
    }
}
