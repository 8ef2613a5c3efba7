#include "clhopf/cli/run.hpp"

#include <fstream>

#include "clhopf/hopf_analysis.hpp"

namespace clhopf::cli {

namespace {

struct Forms {
  RingMatrix<MultiPoly> eta;
  RingMatrix<MultiPoly> xi;
};

RingMatrix<MultiPoly> parse_matrix(const TextMatrix& text, const std::set<std::string>& symbols, const char* name) {
  const std::size_t n = text.size();
  RingMatrix<MultiPoly> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        m(i, j) = parse_expr(text[i][j], symbols);
      } catch (const ParseError& e) {
        throw InputError(std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
      }
    }
  return m;
}

RingMatrix<MultiPoly> specialize(const RingMatrix<MultiPoly>& m, const Assignment& at) {
  return m.map([&](const MultiPoly& p) { return p.specialize(at); });
}

RingMatrix<Rational> to_rational(const RingMatrix<MultiPoly>& m, const char* name) {
  RingMatrix<Rational> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j).constant_value();
      if (!v)
        throw InputError(std::string(name) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " +
                         m(i, j).to_string() + " is not rational; specialize its symbols or use mode = symbolic");
      out(i, j) = *v;
    }
  return out;
}

bool needs_forms(const std::string& cmd) {
  return cmd == "tables" || cmd == "antipode" || cmd == "main-theorem" || cmd == "crossing";
}

template <Scalar R>
std::vector<TheoremReport> dispatch(const std::string& cmd, const JobConfig& c, const BilinearForm<R>* eta,
                                    const BilinearForm<R>* xi) {
  const std::size_t count = c.count.value_or(0);
  if (needs_forms(cmd) && eta == nullptr) throw InputError("command '" + cmd + "' needs eta and xi");
  if (cmd == "tables") return {tables_report(*eta, *xi)};
  if (cmd == "antipode") return {antipode_report(*eta, *xi)};
  if (cmd == "main-theorem") return {verify_main_theorem(*eta, *xi, c.seed)};
  if (cmd == "crossing") {
    if constexpr (FieldScalar<R>) {
      if (eta->dim_v() > 3) throw InputError("crossing commands need dim V <= 3");
      return {crossing_report(*eta, *xi)};
    } else {
      throw InputError("crossing needs rational forms");
    }
  }
  if (cmd == "splitting") {
    if (eta == nullptr) return {splitting_sweep(c.seed, count ? count : 200)};
    if constexpr (FieldScalar<R>)
      return {splitting_report(*eta, *xi)};
    else
      throw InputError("splitting needs rational forms");
  }
  if (cmd == "antipodeless") return {antipodeless_suite(c.seed)};
  if (cmd == "degree-analysis") return {crossing_degree_analysis(c.seed)};
  if (cmd == "sweep") return {main_theorem_sweep(c.seed, count ? count : 500)};
  if (cmd == "family") return {verify_parametrized_family(c.seed), degenerate_family_report(c.seed, count ? count : 50)};
  if (cmd == "gl") return {gl_report(c.seed)};
  throw InputError("unknown command '" + cmd + "'");
}

void stamp(std::vector<TheoremReport>& reports, const Assignment& at) {
  for (auto& r : reports)
    for (const auto& [k, v] : at) r.context.specialization[k] = v.to_string();
}

}  // namespace

RunResult run(const JobConfig& config) {
  RunResult result;
  bool input_error = false, internal_error = false;
  try {
    validate(config);
    std::optional<Forms> forms;
    if (config.eta) {
      const auto symbols = config.symbol_set();
      forms = Forms{parse_matrix(*config.eta, symbols, "eta"), parse_matrix(*config.xi, symbols, "xi")};
    }
    std::vector<Assignment> points = config.specializations;
    if (points.empty()) points.emplace_back();
    for (const auto& at : points) {
      std::optional<BilinearForm<Rational>> qe, qx;
      std::optional<BilinearForm<MultiPoly>> pe, px;
      if (forms) {
        auto e = specialize(forms->eta, at), x = specialize(forms->xi, at);
        if (config.mode == CoefficientMode::Rational) {
          qe.emplace(FormRole::Scalar, to_rational(e, "eta"));
          qx.emplace(FormRole::Coscalar, to_rational(x, "xi"));
        } else {
          pe.emplace(FormRole::Scalar, std::move(e));
          px.emplace(FormRole::Coscalar, std::move(x));
        }
      }
      for (const auto& cmd : config.commands) {
        try {
          auto reports = config.mode == CoefficientMode::Rational
                             ? dispatch<Rational>(cmd, config, qe ? &*qe : nullptr, qx ? &*qx : nullptr)
                             : dispatch<MultiPoly>(cmd, config, pe ? &*pe : nullptr, px ? &*px : nullptr);
          stamp(reports, at);
          for (auto& r : reports) result.reports.push_back(std::move(r));
        } catch (const InputError&) {
          throw;
        } catch (const DimensionError& e) {
          throw InputError(cmd + ": " + e.what());
        } catch (const MissingVariable& e) {
          throw InputError(cmd + ": " + e.what());
        } catch (const std::exception& e) {
          internal_error = true;
          result.errors.push_back(cmd + ": " + e.what());
        }
      }
    }
    if (config.commands.empty()) throw InputError("no commands given");
  } catch (const InputError& e) {
    input_error = true;
    result.errors.push_back(e.what());
  }
  bool failed = internal_error;
  for (const auto& r : result.reports) failed = failed || r.any_failed();
  result.exit_code = input_error ? 1 : failed ? 2 : 0;
  return result;
}

int run_and_write(const JobConfig& config, std::ostream& out, std::ostream& err) {
  const RunResult result = run(config);
  const std::string text = config.format == "text" ? render_text(result) : render_json(result);
  if (config.output.empty()) {
    out << text;
  } else {
    std::ofstream file(config.output, std::ios::binary);
    if (!file) {
      err << "clhopf: cannot write '" << config.output << "'\n";
      return 1;
    }
    file << text;
  }
  for (const auto& e : result.errors) err << "clhopf: " << e << "\n";
  return result.exit_code;
}

}  // namespace clhopf::cli
