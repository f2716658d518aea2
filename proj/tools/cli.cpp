#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "contractions/dual.hpp"
#include "contractions/enumerate.hpp"
#include "contractions/formulas.hpp"
#include "contractions/table_io.hpp"
#include "contractions/verify.hpp"

namespace contractions::cli {

namespace {

// CONTRACTION_SEMIGROUPS_MAX_N may lower the enumeration guards; it never
// raises them and it binds even when --allow-large is set.
std::optional<int> env_cap() {
  const char* value = std::getenv("CONTRACTION_SEMIGROUPS_MAX_N");
  if (value == nullptr || *value == '\0') return std::nullopt;
  try {
    return std::stoi(value);
  } catch (const std::exception&) {
    throw std::invalid_argument(
        "CONTRACTION_SEMIGROUPS_MAX_N must be an integer");
  }
}

void check_env_cap(int n) {
  if (const auto cap = env_cap(); cap && n > *cap) {
    throw GuardError("n = " + std::to_string(n) +
                     " exceeds CONTRACTION_SEMIGROUPS_MAX_N = " +
                     std::to_string(*cap));
  }
}

std::vector<int> parse_int_list(const std::string& text, char sep,
                                const std::string& what) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, sep)) {
    try {
      values.push_back(std::stoi(field));
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed " + what + ": " + text);
    }
  }
  if (values.empty()) {
    throw std::invalid_argument("malformed " + what + ": " + text);
  }
  return values;
}

struct Options {
  int n = 1;
  std::string family;
  std::string by = "height";
  std::optional<int> p;
  std::optional<int> m;
  std::optional<int> q;
  std::string image;
  std::string profile;
  std::string format = "table";
  std::string out_path;
  bool allow_large = false;
  bool all_methods = false;
  int workers = 1;
  int max_n_filtered = 6;
  int max_n_direct = 10;
  std::string name;  // formula or sequence name
};

// Writes either to the --out path or to the primary stream.
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback)
      : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) {
        throw std::invalid_argument("cannot open output path: " + path);
      }
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
};

Family required_family(const Options& opt) {
  const auto family = parse_family(opt.family);
  if (!family) {
    throw std::invalid_argument("unknown family: " + opt.family);
  }
  return *family;
}

void write_scalar(std::ostream& out, const std::string& format,
                  const BigCount& value) {
  if (format == "csv") {
    out << "count\n" << value << "\n";
  } else if (format == "json") {
    out << "{\n  \"count\": \"" << value << "\"\n}\n";
  } else {
    out << value << "\n";
  }
}

int cmd_enumerate(const Options& opt, std::ostream& out) {
  const Family family = required_family(opt);
  check_env_cap(opt.n);
  OutputTarget target(opt.out_path, out);
  const bool direct = family != Family::I && family != Family::CI;
  const MapVisitor print = [&](const PartialInjection& alpha) {
    target.stream() << alpha.to_string() << "\n";
  };
  if (direct) {
    enumerate_direct(opt.n, family, print, opt.allow_large);
  } else {
    enumerate_filtered(opt.n, family, print, opt.allow_large);
  }
  return kExitOk;
}

int cmd_count(const Options& opt, std::ostream& out) {
  const Family family = required_family(opt);
  check_env_cap(opt.n);
  OutputTarget target(opt.out_path, out);

  if (!opt.image.empty()) {
    if (family != Family::OCI) {
      throw std::invalid_argument("--image counts are defined for --family oci");
    }
    write_scalar(target.stream(), opt.format,
                 count_with_image(opt.n, parse_int_list(opt.image, ',', "image")));
    return kExitOk;
  }
  if (!opt.profile.empty()) {
    if (family != Family::ODCI) {
      throw std::invalid_argument(
          "--profile counts are defined for --family odci");
    }
    const std::vector<int> keys = parse_int_list(opt.profile, ':', "profile");
    if (keys.size() != 4) {
      throw std::invalid_argument("--profile expects k-:k+:l+:p");
    }
    const BigCount value =
        opt.m ? count_odci_profile_fix(opt.n, keys[0], keys[1], keys[2], *opt.m,
                                       keys[3])
              : count_odci_profile(opt.n, keys[0], keys[1], keys[2], keys[3]);
    write_scalar(target.stream(), opt.format, value);
    return kExitOk;
  }

  if (opt.by != "height" && opt.by != "height-fix") {
    throw std::invalid_argument("--by must be height or height-fix");
  }
  const CountTable table =
      opt.by == "height"
          ? count_by_height(opt.n, family, CountMethod::auto_select,
                            opt.workers, opt.allow_large)
          : count_by_height_fix(opt.n, family, CountMethod::auto_select,
                                opt.workers, opt.allow_large);

  // Apply --p / --m filters; fixed columns drop out of the output.
  const auto& columns = key_columns(table.schema);
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == "p" && opt.p) continue;
    if (columns[c] == "m" && opt.m) continue;
    keep.push_back(c);
  }
  std::vector<std::string> out_columns;
  for (std::size_t c : keep) out_columns.push_back(columns[c]);
  TableRows rows;
  for (const auto& [key, value] : table.cells) {
    bool selected = true;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (columns[c] == "p" && opt.p && key[c] != *opt.p) selected = false;
      if (columns[c] == "m" && opt.m && key[c] != *opt.m) selected = false;
    }
    if (!selected) continue;
    std::vector<int> out_key;
    for (std::size_t c : keep) out_key.push_back(key[c]);
    rows.emplace_back(std::move(out_key), value);
  }

  if (opt.format == "csv") {
    write_csv(target.stream(), out_columns, rows);
  } else if (opt.format == "json") {
    KeyValueList metadata = {{"schema", std::string(schema_name(table.schema))},
                             {"n", std::to_string(table.n)},
                             {"family", std::string(family_name(table.family))}};
    if (opt.p) metadata.emplace_back("p", std::to_string(*opt.p));
    if (opt.m) metadata.emplace_back("m", std::to_string(*opt.m));
    write_json(target.stream(), out_columns, rows, metadata);
  } else {
    write_text(target.stream(), out_columns, rows);
  }
  return kExitOk;
}

int need(const std::optional<int>& value, const char* flag) {
  if (!value) {
    throw std::invalid_argument(std::string("missing required flag ") + flag);
  }
  return *value;
}

int cmd_formula(const Options& opt, std::ostream& out) {
  OutputTarget target(opt.out_path, out);
  std::ostream& os = target.stream();
  const std::string& name = opt.name;

  if (name == "order-oci") {
    if (opt.all_methods) {
      os << "closed " << order_oci(opt.n, OrderMethod::closed) << "\n"
         << "recurrence " << order_oci(opt.n, OrderMethod::recurrence) << "\n"
         << "summation " << order_oci(opt.n, OrderMethod::summation) << "\n";
    } else {
      os << order_oci(opt.n) << "\n";
    }
    return kExitOk;
  }

  BigCount value;
  if (name == "order-odci") {
    value = order_odci(opt.n);
  } else if (name == "order-orci") {
    value = order_orci(opt.n);
  } else if (name == "oci-height") {
    value = oci_height_count(opt.n, need(opt.p, "--p"));
  } else if (name == "odci-height") {
    value = odci_height_count(opt.n, need(opt.p, "--p"));
  } else if (name == "orci-height") {
    value = orci_height_count(opt.n, need(opt.p, "--p"));
  } else if (name == "oci-height-fix") {
    value = oci_height_fix_count(opt.n, need(opt.p, "--p"), need(opt.m, "--m"));
  } else if (name == "odci-height-fix") {
    value = odci_height_fix_count(opt.n, need(opt.p, "--p"), need(opt.m, "--m"));
  } else if (name == "orci-height-fix") {
    value = orci_height_fix_count(opt.n, need(opt.p, "--p"), need(opt.m, "--m"));
  } else if (name == "orci-height-fix-uncorrected") {
    value = orci_height_fix_count_uncorrected(opt.n, need(opt.p, "--p"),
                                              need(opt.m, "--m"));
  } else if (name == "ociplus-height-fix") {
    value = ociplus_height_fix_count(opt.n, need(opt.p, "--p"), need(opt.m, "--m"));
  } else if (name == "oci-image-class") {
    value = oci_image_class_count(opt.n, need(opt.p, "--p"), need(opt.q, "--q"));
  } else if (name == "odci-profile" || name == "odci-profile-fix") {
    if (opt.profile.empty()) {
      throw std::invalid_argument("missing required flag --profile");
    }
    const std::vector<int> keys = parse_int_list(opt.profile, ':', "profile");
    if (keys.size() != 4) {
      throw std::invalid_argument("--profile expects k-:k+:l+:p");
    }
    value = name == "odci-profile"
                ? odci_profile_count(opt.n, keys[0], keys[1], keys[2], keys[3])
                : odci_profile_fix_count(opt.n, keys[0], keys[1], keys[2],
                                         need(opt.m, "--m"), keys[3]);
  } else if (name == "fibonacci") {
    value = fibonacci(opt.n);
  } else if (name == "fib-odd") {
    value = fib_identity_odd(opt.n);
  } else if (name == "fib-even") {
    value = fib_identity_even(opt.n);
  } else {
    throw std::invalid_argument("unknown formula: " + name);
  }
  os << value << "\n";
  return kExitOk;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  int mnf = opt.max_n_filtered;
  int mnd = opt.max_n_direct;
  if (const auto cap = env_cap()) {
    if (*cap < mnf || *cap < mnd) {
      err << "note: CONTRACTION_SEMIGROUPS_MAX_N lowers the verify bounds to "
          << *cap << "\n";
    }
    mnf = std::min(mnf, *cap);
    mnd = std::min(mnd, *cap);
  }
  const VerificationReport report = run_suite(mnf, mnd);
  OutputTarget target(opt.out_path, out);
  report.write(target.stream());
  if (target.to_file()) {
    out << "records " << report.records.size() << " pass "
        << report.pass_count() << " fail " << report.fail_count()
        << " documented_mismatch " << report.mismatch_count() << "\n"
        << "report written to " << opt.out_path << "\n";
  }
  return report.ok() ? kExitOk : kExitFailure;
}

int cmd_sequence(const Options& opt, std::ostream& out) {
  const VerificationReport report = check_sequence(opt.name, opt.n);
  OutputTarget target(opt.out_path, out);
  report.write(target.stream());
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact enumeration and counting of partial injective "
               "contraction mappings of the chain {1..n}"};
  app.require_subcommand(1);

  Options opt;

  auto add_common = [&](CLI::App* sub, bool with_family) {
    sub->add_option("--n", opt.n, "chain size")->check(CLI::PositiveNumber);
    if (with_family) {
      sub->add_option("--family", opt.family,
                      "one of i, ci, oci, oci-plus, orci, odci")
          ->required();
    }
    sub->add_option("--out", opt.out_path, "write output to this path");
    sub->add_flag("--allow-large", opt.allow_large,
                  "override the built-in enumeration guards");
  };

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "list every map of a family, one per line");
  add_common(enumerate, true);
  enumerate->get_option("--n")->required();

  CLI::App* count = app.add_subcommand(
      "count", "exact count tables by height, height and fix, image, or "
               "waist/shoulder profile");
  add_common(count, true);
  count->get_option("--n")->required();
  count->add_option("--by", opt.by, "height or height-fix");
  count->add_option("--p", opt.p, "restrict to this height");
  count->add_option("--m", opt.m, "restrict to this fixed-point count");
  count->add_option("--image", opt.image,
                    "strictly increasing image tuple a,b,c (family oci)");
  count->add_option("--profile", opt.profile,
                    "profile key k-:k+:l+:p (family odci)");
  count->add_option("--format", opt.format, "table, csv, or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  count->add_option("--workers", opt.workers, "parallel counting workers")
      ->check(CLI::PositiveNumber);

  CLI::App* formula =
      app.add_subcommand("formula", "evaluate a registered closed form");
  formula->add_option("name", opt.name, "formula name")->required();
  add_common(formula, false);
  formula->add_option("--p", opt.p, "height parameter");
  formula->add_option("--m", opt.m, "fixed-point parameter");
  formula->add_option("--q", opt.q, "image gap-sum parameter");
  formula->add_option("--profile", opt.profile, "profile key k-:k+:l+:p");
  formula->add_flag("--all-methods", opt.all_methods,
                    "print every evaluation route (order-oci)");

  CLI::App* verify = app.add_subcommand(
      "verify", "run the oracle-vs-formula verification suite");
  verify->add_option("--max-n-filtered", opt.max_n_filtered,
                     "largest n for I_n-filtered oracles (2..8)");
  verify->add_option("--max-n-direct", opt.max_n_direct,
                     "largest n for direct-construction oracles (..14)");
  verify->add_option("--out", opt.out_path, "write the report to this path");

  CLI::App* sequence = app.add_subcommand(
      "sequence", "compare library values against an embedded integer "
                  "sequence prefix");
  sequence->add_option("name", opt.name, "sequence id, e.g. A094864")
      ->required();
  sequence->add_option("--n", opt.n, "largest index to check")
      ->check(CLI::PositiveNumber);
  sequence->add_option("--out", opt.out_path, "write the report to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) return cmd_enumerate(opt, out);
    if (app.got_subcommand(count)) return cmd_count(opt, out);
    if (app.got_subcommand(formula)) return cmd_formula(opt, out);
    if (app.got_subcommand(verify)) return cmd_verify(opt, out, err);
    if (app.got_subcommand(sequence)) return cmd_sequence(opt, out);
  } catch (const GuardError& e) {
    err << "guard violation: " << e.what() << "\n";
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace contractions::cli
