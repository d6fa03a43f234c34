// nf: normal forms of prime-order mapping classes.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "primenf/class_data.hpp"
#include "primenf/errors.hpp"
#include "primenf/intersection.hpp"
#include "primenf/normal_form.hpp"
#include "primenf/presentation.hpp"
#include "primenf/serialize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kInvariant = 3;

struct ClassArgs {
  int p = 0;
  std::vector<int> n;
  int g0 = 0;
};

void add_class_options(CLI::App* cmd, ClassArgs& args) {
  cmd->add_option("-p", args.p, "prime order")->required();
  cmd->add_option("-n", args.n, "rotation numbers n1,n2,... (omit for t = 0)")
      ->delimiter(',');
  cmd->add_option("--g0", args.g0, "quotient genus")->required();
}

primenf::Presentation presentation_for(const primenf::ConjugacyClass& cls) {
  if (cls.t() == 0) return primenf::t0_presentation(cls).presentation;
  return primenf::build_presentation(primenf::normalize_class(cls).cls);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic normal forms of prime-order mapping classes"};
  app.require_subcommand(1);

  ClassArgs compute_args;
  std::string compute_format = "json";
  bool trace_steps = false;
  auto* compute = app.add_subcommand("compute", "normal form of one class");
  add_class_options(compute, compute_args);
  compute->add_option("--format", compute_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  compute->add_flag("--trace-steps", trace_steps, "include one record per reduction step");

  int enum_g = 0, enum_p = 0;
  bool all_primes = false;
  std::string enum_format = "csv";
  auto* enumerate = app.add_subcommand("enumerate", "normal forms of every admissible class");
  enumerate->add_option("-g", enum_g, "genus")->required();
  auto* p_opt = enumerate->add_option("-p", enum_p, "prime order");
  enumerate->add_flag("--all-primes", all_primes, "every prime p <= 2g + 1");
  enumerate->add_option("--format", enum_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  ClassArgs pres_args;
  auto* presentation = app.add_subcommand("presentation", "adapted generators and relation");
  add_class_options(presentation, pres_args);

  ClassArgs inter_args;
  auto* intersection = app.add_subcommand("intersection", "adapted intersection matrix");
  add_class_options(intersection, inter_args);

  std::string matrix_file, j_file, check_format = "json";
  auto* check = app.add_subcommand("check", "screen a symplectic matrix of prime order");
  check->add_option("--matrix", matrix_file, "JSON matrix file")->required();
  check->add_option("--J", j_file, "JSON file with the symplectic form");
  check->add_option("--format", check_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*compute) {
      const auto r = primenf::normal_form(compute_args.p, compute_args.n, compute_args.g0);
      std::cout << primenf::render(r, primenf::parse_format(compute_format), trace_steps);
    } else if (*enumerate) {
      if (!all_primes && p_opt->count() == 0) {
        throw primenf::ValidationError("enumerate needs -p or --all-primes");
      }
      std::vector<int> primes;
      if (all_primes) {
        for (int p = 2; p <= 2 * enum_g + 1; ++p)
          if (primenf::is_prime(p)) primes.push_back(p);
      } else {
        primes.push_back(enum_p);
      }
      if (enum_g < 2) throw primenf::ValidationError("genus must be at least 2");
      std::vector<primenf::NormalFormResult> results;
      for (int p : primes) {
        if (!primenf::is_prime(p)) {
          throw primenf::ValidationError(std::to_string(p) + " is not prime");
        }
        for (const auto& cls : primenf::enumerate_classes(enum_g, p)) {
          results.push_back(primenf::normal_form(cls));
        }
      }
      std::cout << primenf::render_classes(results, primenf::parse_format(enum_format));
    } else if (*presentation) {
      const auto cls = primenf::validate_class(pres_args.p, pres_args.n, pres_args.g0);
      std::cout << primenf::presentation_to_json(presentation_for(cls)).dump(2) << '\n';
    } else if (*intersection) {
      const auto cls = primenf::validate_class(inter_args.p, inter_args.n, inter_args.g0);
      const auto norm = primenf::normalize_class(cls).cls;
      std::cout << primenf::matrix_to_json(primenf::adapted_intersection(norm)).dump() << '\n';
    } else if (*check) {
      const auto m = primenf::read_matrix_file(matrix_file);
      if (m.rows() % 2 != 0 || !m.is_square()) {
        throw primenf::ValidationError("matrix must be square of even size");
      }
      const auto j = j_file.empty()
                         ? primenf::standard_J(0, static_cast<int>(m.rows() / 2))
                         : primenf::read_matrix_file(j_file);
      const auto v = primenf::candidate_check(m, j);
      std::cout << primenf::render_verdict(v, primenf::parse_format(check_format));
    }
  } catch (const primenf::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const primenf::InvariantError& e) {
    std::cerr << "internal invariant failure [" << e.stage() << "]: " << e.details() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kOk;
}
