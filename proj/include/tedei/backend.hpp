#pragma once

// Axiom construction and serialization: DL notation (read/write), OWL 2
// functional-style syntax, a JSON dump, and an expressivity census.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tedei/interpreter.hpp"
#include "tedei/model.hpp"

namespace tedei {

Axiom toAxiom(const Interpretation& interp, const std::string& sentence_id = {});

// Unicode DL notation, operands in canonical order.
std::string serializeDL(const ClassExprPtr& expr);
std::string serializeDL(const Axiom& axiom);

// Reads the notation written by serializeDL. Also accepts "≥3has.X" without a
// space and a restriction with no ".filler" (filler ⊤). Throws Error(Parse).
ClassExprPtr parseDLExpr(std::string_view text);
Axiom parseDLAxiom(std::string_view text);

bool isValidIri(std::string_view iri);

// OWL 2 functional-style document; throws Error(InvalidIri).
std::string serializeFunctional(const std::vector<Axiom>& axioms, const std::string& ontology_iri);
// A single axiom in functional syntax with the default ':' prefix.
std::string functionalAxiom(const Axiom& axiom);

nlohmann::json exprToJson(const ClassExprPtr& expr);
ClassExprPtr exprFromJson(const nlohmann::json& j);
nlohmann::json axiomToJson(const Axiom& axiom);
Axiom axiomFromJson(const nlohmann::json& j);

// Description-logic name of the constructors used, e.g. "ALC", "ALCQ", "ALCOQ(Self)".
std::string expressivity(const std::vector<Axiom>& axioms);

}  // namespace tedei
