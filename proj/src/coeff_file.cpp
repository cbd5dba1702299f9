#include "invpow/coeff_file.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace invpow {

using nlohmann::json;

namespace {

Scalar field_scalar(const json &value, const std::string &where, const NumericMode &mode) {
  if (!value.is_string())
    throw CoefficientFileError(where + ": expected a string, got " + std::string(value.type_name()));
  try {
    return parse_scalar(value.get<std::string>(), mode);
  } catch (const std::invalid_argument &e) {
    std::string msg = where + ": " + e.what();
    if (mode.exact)
      msg += " (declare \"exact\": false for float input)";
    throw CoefficientFileError(msg);
  }
}

} // namespace

TaylorSeries CoefficientFile::to_series() const {
  std::optional<Scalar> hint;
  if (hypothesis_radius && *hypothesis_radius != "inf") {
    try {
      hint = parse_scalar(*hypothesis_radius);
    } catch (const std::invalid_argument &) {
      hint = parse_scalar(*hypothesis_radius, NumericMode::floating(kMinFloatPrecision));
    }
  }
  return TaylorSeries(center, coeffs, std::move(hint));
}

CoefficientFile parse_coefficient_file(std::string_view json_text, mpfr_prec_t float_precision) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw CoefficientFileError(e.what());
  }
  if (!doc.is_object())
    throw CoefficientFileError("top level: expected a JSON object");

  CoefficientFile out;
  if (doc.contains("exact")) {
    if (!doc["exact"].is_boolean())
      throw CoefficientFileError("exact: expected a boolean");
    out.exact = doc["exact"].get<bool>();
  }
  const NumericMode mode = out.exact ? NumericMode{} : NumericMode::floating(float_precision);

  if (!doc.contains("center"))
    throw CoefficientFileError("center: missing");
  out.center = field_scalar(doc["center"], "center", mode);

  if (!doc.contains("coeffs") || !doc["coeffs"].is_array())
    throw CoefficientFileError("coeffs: expected an array of strings");
  const auto &coeffs = doc["coeffs"];
  if (coeffs.empty())
    throw CoefficientFileError("coeffs: at least one coefficient is required");
  for (size_t i = 0; i < coeffs.size(); ++i)
    out.coeffs.push_back(field_scalar(coeffs[i], "coeffs[" + std::to_string(i) + "]", mode));

  if (doc.contains("meta")) {
    const auto &meta = doc["meta"];
    if (!meta.is_object())
      throw CoefficientFileError("meta: expected an object");
    if (meta.contains("hypothesis_radius") && !meta["hypothesis_radius"].is_null()) {
      const auto &r = meta["hypothesis_radius"];
      if (!r.is_string())
        throw CoefficientFileError("meta.hypothesis_radius: expected a string or null");
      const auto text = r.get<std::string>();
      if (text != "inf")
        field_scalar(r, "meta.hypothesis_radius", mode);
      out.hypothesis_radius = text;
    }
    if (meta.contains("description")) {
      if (!meta["description"].is_string())
        throw CoefficientFileError("meta.description: expected a string");
      out.description = meta["description"].get<std::string>();
    }
  }
  return out;
}

std::string format_coefficient_file(const CoefficientFile &file) {
  const auto render = [](const Scalar &x) {
    return x.exact() ? x.str() : render_decimal(x, decimal_digits_for(x.precision()));
  };
  json doc;
  doc["center"] = render(file.center);
  doc["coeffs"] = json::array();
  for (const auto &c : file.coeffs)
    doc["coeffs"].push_back(render(c));
  doc["exact"] = file.exact;
  doc["meta"]["hypothesis_radius"] =
      file.hypothesis_radius ? json(*file.hypothesis_radius) : json(nullptr);
  doc["meta"]["description"] = file.description;
  return doc.dump(2) + "\n";
}

CoefficientFile make_coefficient_file(const TaylorSeries &series, std::string description,
                                      std::optional<std::string> radius_text) {
  CoefficientFile out;
  out.center = series.x0;
  out.coeffs = series.coeffs;
  out.exact = series.exact();
  out.description = std::move(description);
  if (radius_text)
    out.hypothesis_radius = std::move(radius_text);
  else if (series.radius_hint)
    out.hypothesis_radius = series.radius_hint->str();
  return out;
}

TaylorSeries load_coefficient_file(const std::filesystem::path &path, mpfr_prec_t float_precision) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw CoefficientFileError(path.string() + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_coefficient_file(buf.str(), float_precision).to_series();
  } catch (const CoefficientFileError &e) {
    throw CoefficientFileError(path.string() + ": " + e.what());
  }
}

void save_coefficient_file(const TaylorSeries &series, const std::filesystem::path &path,
                           std::string description) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw std::runtime_error(path.string() + ": cannot open for writing");
  out << format_coefficient_file(make_coefficient_file(series, std::move(description)));
  if (!out)
    throw std::runtime_error(path.string() + ": write failed");
}

} // namespace invpow
