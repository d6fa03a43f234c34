#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "primenf/int_matrix.hpp"
#include "primenf/normal_form.hpp"
#include "primenf/presentation.hpp"
#include "primenf/words.hpp"

namespace primenf {

enum class Format { json, text, csv };

Format parse_format(const std::string& name);

/// Array of rows of decimal strings.
nlohmann::json matrix_to_json(const IntMatrix& m);
/// Accepts decimal strings or JSON integers.
IntMatrix matrix_from_json(const nlohmann::json& j);
IntMatrix read_matrix_file(const std::string& path);

nlohmann::json word_to_json(const Word& w);
nlohmann::json class_to_json(const ConjugacyClass& cls);
nlohmann::json presentation_to_json(const Presentation& pres);
nlohmann::json step_to_json(const StepRecord& step, std::size_t index);
nlohmann::json result_to_json(const NormalFormResult& r, bool with_steps = false);
nlohmann::json verdict_to_json(const CandidateVerdict& v);

std::string render(const NormalFormResult& r, Format format, bool with_steps = false);
std::string render_classes(const std::vector<NormalFormResult>& results, Format format);
std::string render_verdict(const CandidateVerdict& v, Format format);

}  // namespace primenf
