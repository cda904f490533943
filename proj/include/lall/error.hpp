#pragma once

#include <stdexcept>
#include <string>

namespace lall {

enum class errc {
  syntax_error,
  type_mismatch,
  not_affine,
  ill_typed,
  arity_mismatch,
  indexing_inconsistent,
  too_many_inputs_for_bang_box,
  shape_mismatch,
  label_mismatch,
  not_reducible,
  budget_exceeded,
  decode_failure,
  not_a_scott_numeral,
  invalid_net,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::type_mismatch: return "TypeMismatch";
    case errc::not_affine: return "NotAffine";
    case errc::ill_typed: return "IllTyped";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::indexing_inconsistent: return "IndexingInconsistent";
    case errc::too_many_inputs_for_bang_box: return "TooManyInputsForBangBox";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::label_mismatch: return "LabelMismatch";
    case errc::not_reducible: return "NotReducible";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::decode_failure: return "DecodeFailure";
    case errc::not_a_scott_numeral: return "NotAScottNumeral";
    case errc::invalid_net: return "InvalidNet";
  }
  return "Error";
}

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code(c) {}
};

}  // namespace lall
