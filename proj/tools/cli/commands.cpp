// Copyright 2026 The partsemi Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "cli/commands.hpp"

#include <algorithm>  // for reverse
#include <chrono>     // for steady_clock
#include <iomanip>    // for setprecision
#include <map>        // for map
#include <optional>   // for optional
#include <ostream>    // for ostream

#include "CLI11.hpp"
#include "json.hpp"

#include "cli/verify.hpp"
#include "partsemi/count.hpp"
#include "partsemi/cycles.hpp"
#include "partsemi/enumerate.hpp"
#include "partsemi/errors.hpp"
#include "partsemi/membership.hpp"
#include "partsemi/text.hpp"

namespace partsemi::cli {

  namespace {

    using json = nlohmann::ordered_json;

    enum class Format { lines, json, csv };

    struct GlobalOptions {
      Format                format = Format::lines;
      std::optional<size_t> limit;
      std::uint64_t         guard = default_enumeration_guard;
    };

    // An input the command cannot act on; maps to exit code 2.
    struct InputError : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    SetPartition partition_arg(std::string const& text) {
      return parse_partition(text);
    }

    Transformation map_arg(std::string const& text, size_t n) {
      return parse_transformation(text, n);
    }

    json block_map_json(BlockMap const& bm) {
      return {{"domain", bm.domain},
              {"codomain", bm.codomain},
              {"images", bm.images}};
    }

    std::string block_map_line(BlockMap const& bm, SetPartition const& p) {
      std::string line = "block " + std::to_string(bm.domain) + " -> "
                         + std::to_string(bm.codomain) + ":";
      auto dom = p.block(bm.domain);
      for (size_t r = 0; r < dom.size(); ++r) {
        line += (r == 0 ? " " : ",") + std::to_string(dom[r]) + "->"
                + std::to_string(bm.images[r]);
      }
      return line;
    }

    ////////////////////////////////////////////////////////////////////////
    // check
    ////////////////////////////////////////////////////////////////////////

    struct CheckArgs {
      std::string partition;
      std::string map;
      std::string predicate;
    };

    int cmd_check(CheckArgs const&     a,
                  GlobalOptions const& g,
                  std::ostream&        out) {
      auto const p = partition_arg(a.partition);
      auto const f = map_arg(a.map, p.degree());

      static std::map<std::string,
                      bool (*)(Transformation const&, SetPartition const&)> const
          predicates{{"preserves", preserves},
                     {"sigma", in_sigma},
                     {"sigma-character", sigma_via_character},
                     {"sigma-topology", sigma_via_topology},
                     {"estar", is_e_star_preserving},
                     {"units", in_units},
                     {"sigma-idempotent", sigma_idempotent_via_blocks}};

      bool result = false;
      if (a.predicate == "idempotent") {
        result = is_idempotent(f);
      } else {
        result = predicates.at(a.predicate)(f, p);
      }

      if (g.format == Format::json) {
        json doc{{"predicate", a.predicate},
                 {"partition", to_string(p)},
                 {"map", to_string(f)},
                 {"result", result}};
        if (auto split = split_block(f, p)) {
          doc["split_block"] = *split;
        } else {
          doc["character"] = to_string(character(f, p));
        }
        out << doc.dump() << '\n';
      } else if (g.format == Format::csv) {
        out << "predicate,partition,map,result\n"
            << a.predicate << ",\"" << to_string(p) << "\",\"" << to_string(f)
            << "\"," << (result ? "true" : "false") << '\n';
      } else {
        out << (result ? "true" : "false") << '\n';
      }
      return result ? success : negative;
    }

    ////////////////////////////////////////////////////////////////////////
    // character
    ////////////////////////////////////////////////////////////////////////

    int cmd_character(std::string const&   partition,
                      std::string const&   map,
                      GlobalOptions const& g,
                      std::ostream&        out) {
      auto const p      = partition_arg(partition);
      auto const f      = map_arg(map, p.degree());
      auto const chi    = character(f, p);
      auto const family = block_map_family(f, p);

      if (g.format == Format::json) {
        json members = json::array();
        for (auto const& bm : family.members()) {
          members.push_back(block_map_json(bm));
        }
        out << json{{"partition", to_string(p)},
                    {"map", to_string(f)},
                    {"character", to_string(chi)},
                    {"block_maps", members}}
                   .dump()
            << '\n';
      } else if (g.format == Format::csv) {
        out << "domain,codomain,images\n";
        for (auto const& bm : family.members()) {
          std::string images;
          for (size_t r = 0; r < bm.images.size(); ++r) {
            images += (r ? "," : "") + std::to_string(bm.images[r]);
          }
          out << bm.domain << ',' << bm.codomain << ",\"" << images
              << "\"\n";
        }
      } else {
        out << "character " << to_string(chi) << '\n';
        for (auto const& bm : family.members()) {
          out << block_map_line(bm, p) << '\n';
        }
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // count
    ////////////////////////////////////////////////////////////////////////

    struct CountArgs {
      std::string partition;
      std::string profile;
      std::string set;
      std::string method = "grouped";
    };

    int cmd_count(CountArgs const& a, GlobalOptions const& g, std::ostream& out) {
      if (a.partition.empty() == a.profile.empty()) {
        throw InputError("give exactly one of --partition and --profile");
      }
      std::optional<SetPartition> p;
      if (!a.partition.empty()) {
        p = partition_arg(a.partition);
      }
      auto const profile = p ? profile_of(*p) : parse_profile(a.profile);

      BigInt value;
      if (a.set == "T") {
        value = count_t(profile);
      } else if (a.set == "S") {
        value = count_units(profile);
      } else if (a.set == "E-Sigma") {
        value = count_sigma_idempotents(profile);
      } else if (a.method == "direct") {
        if (!p) {
          throw InputError("--method direct needs a concrete --partition");
        }
        value = count_sigma_direct(*p, g.guard);
      } else {
        value = count_sigma_grouped(profile, g.guard);
      }

      if (g.format == Format::json) {
        out << json{{"set", a.set},
                    {"profile", to_string(profile)},
                    {"count", value.str()}}
                   .dump()
            << '\n';
      } else if (g.format == Format::csv) {
        out << "set,profile,count\n"
            << a.set << ",\"" << to_string(profile) << "\"," << value.str()
            << '\n';
      } else {
        out << value.str() << '\n';
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // enumerate
    ////////////////////////////////////////////////////////////////////////

    struct EnumerateArgs {
      std::string partition;
      std::string set;
      std::string strategy = "constructive";
    };

    int cmd_enumerate(EnumerateArgs const& a,
                      GlobalOptions const& g,
                      std::ostream&        out) {
      auto const         p = partition_arg(a.partition);
      EnumerationOptions opts{a.strategy == "brute" ? Strategy::brute
                                                    : Strategy::constructive,
                              g.limit,
                              g.guard};
      Enumeration e;
      if (a.set == "T") {
        e = enumerate_t(p, opts);
      } else if (a.set == "Sigma") {
        e = enumerate_sigma(p, opts);
      } else if (a.set == "S") {
        e = enumerate_units(p, opts);
      } else if (a.set == "E-Sigma") {
        e = enumerate_idempotents(p, Ambient::Sigma, opts);
      } else {
        e = enumerate_idempotents(p, Ambient::T, opts);
      }

      if (g.format == Format::json) {
        json maps = json::array();
        for (auto const& f : e.maps) {
          maps.push_back(to_string(f));
        }
        out << json{{"partition", to_string(p)},
                    {"set", a.set},
                    {"maps", maps},
                    {"total", e.maps.size()},
                    {"truncated", e.truncated}}
                   .dump()
            << '\n';
      } else if (g.format == Format::csv) {
        out << "index,map\n";
        for (size_t i = 0; i < e.maps.size(); ++i) {
          out << i << ",\"" << to_string(e.maps[i]) << "\"\n";
        }
        out << "# total " << e.maps.size() << (e.truncated ? " (truncated)" : "")
            << '\n';
      } else {
        for (auto const& f : e.maps) {
          out << to_string(f) << '\n';
        }
        out << "# total " << e.maps.size() << (e.truncated ? " (truncated)" : "")
            << '\n';
      }
      return success;
    }

    ////////////////////////////////////////////////////////////////////////
    // quotient
    ////////////////////////////////////////////////////////////////////////

    int cmd_quotient(std::string const&   partition,
                     size_t               representatives,
                     GlobalOptions const& g,
                     std::ostream&        out) {
      auto const p = partition_arg(partition);
      auto const classes
          = chi_classes(p,
                        representatives,
                        {Strategy::constructive, std::nullopt, g.guard});

      BigInt     total     = 0;
      bool       sizes_ok  = true;
      BigInt const expected_classes = factorial(p.number_of_blocks());
      for (auto const& cls : classes) {
        total += cls.size;
        sizes_ok = sizes_ok && sigma_class_size(p, cls.character) == cls.size;
      }
      BigInt const sigma     = count_sigma_grouped(profile_of(p), g.guard);
      bool const   count_ok  = expected_classes == classes.size();
      bool const   total_ok  = total == sigma;
      bool const   ok        = sizes_ok && count_ok && total_ok;

      if (g.format == Format::json) {
        json rows = json::array();
        for (auto const& cls : classes) {
          json row{{"character", to_string(cls.character)},
                   {"size", cls.size},
                   {"predicted", sigma_class_size(p, cls.character).str()}};
          if (representatives > 0) {
            json reps = json::array();
            for (auto const& f : cls.representatives) {
              reps.push_back(to_string(f));
            }
            row["representatives"] = reps;
          }
          rows.push_back(row);
        }
        out << json{{"partition", to_string(p)},
                    {"classes", rows},
                    {"class_count", classes.size()},
                    {"expected_class_count", expected_classes.str()},
                    {"total", total.str()},
                    {"sigma", sigma.str()},
                    {"ok", ok}}
                   .dump()
            << '\n';
      } else if (g.format == Format::csv) {
        out << "character,size,predicted\n";
        for (auto const& cls : classes) {
          out << '"' << to_string(cls.character) << "\"," << cls.size << ','
              << sigma_class_size(p, cls.character).str() << '\n';
        }
      } else {
        for (auto const& cls : classes) {
          out << to_string(cls.character) << '\t' << cls.size;
          for (auto const& f : cls.representatives) {
            out << '\t' << to_string(f);
          }
          out << '\n';
        }
      }
      if (g.format != Format::json) {
        out << "# classes " << classes.size() << " (m! = "
            << expected_classes.str() << ") " << (count_ok ? "ok" : "MISMATCH")
            << '\n'
            << "# total " << total.str() << " (|Sigma| = " << sigma.str()
            << ") " << (total_ok ? "ok" : "MISMATCH") << '\n'
            << "# class sizes " << (sizes_ok ? "ok" : "MISMATCH") << '\n';
      }
      return ok ? success : negative;
    }

    ////////////////////////////////////////////////////////////////////////
    // find-partition
    ////////////////////////////////////////////////////////////////////////

    int cmd_find_partition(std::string const&    map,
                           std::optional<size_t> blocks,
                           bool                  verify,
                           GlobalOptions const&  g,
                           std::ostream&         out,
                           std::ostream&         err) {
      auto const f = parse_transformation(map);

      std::optional<SetPartition> found;
      if (blocks) {
        if (!is_full_cycle(f)) {
          throw InputError("-m needs a map that is a single cycle through "
                           "every point");
        }
        if (*blocks <= 1 || *blocks >= f.degree()) {
          throw InputError("-m must lie strictly between 1 and "
                           + std::to_string(f.degree()));
        }
        found = preserved_m_partition(f, *blocks);
      } else {
        found = find_preserved_partition(f);
      }

      std::optional<bool> verified;
      if (verify) {
        auto promised = [&f](SetPartition const& q) {
          return f.is_bijection() ? in_units(f, q) : preserves(f, q);
        };
        if (found) {
          verified = !found->is_trivial() && promised(*found);
        } else {
          if (f.degree() > 12) {
            throw InputError("--verify of \"none\" searches every partition; "
                             "degree must be at most 12");
          }
          verified = !search_partition(f.degree(), promised, blocks).has_value();
        }
        if (!*verified) {
          err << "verification failed\n";
        }
      }

      std::string const text = found ? to_string(*found) : "none";
      if (g.format == Format::json) {
        json doc{{"map", to_string(f)}, {"partition", found ? json(text) : json()}};
        if (blocks) {
          doc["blocks"] = *blocks;
        }
        if (verified) {
          doc["verified"] = *verified;
        }
        out << doc.dump() << '\n';
      } else {
        out << text << '\n';
      }
      if (verified && !*verified) {
        return negative;
      }
      return found ? success : negative;
    }

    ////////////////////////////////////////////////////////////////////////
    // verify
    ////////////////////////////////////////////////////////////////////////

    int cmd_verify(size_t n_max, GlobalOptions const& g, std::ostream& out) {
      if (n_max == 0) {
        throw InputError("--n-max must be at least 1");
      }
      auto const work = verification_work(n_max);
      if (work > g.guard) {
        throw GuardError("verifying up to n = " + std::to_string(n_max)
                             + " examines " + std::to_string(work)
                             + " maps, above the guard of "
                             + std::to_string(g.guard),
                         std::to_string(work));
      }
      auto const start   = std::chrono::steady_clock::now();
      auto const results = run_verification(n_max);
      auto const seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      bool all_ok = true;
      for (auto const& r : results) {
        all_ok = all_ok && r.passed();
      }

      if (g.format == Format::json) {
        json suites = json::array();
        for (auto const& r : results) {
          json row{{"name", r.name},
                   {"claim", r.claim},
                   {"n_max", r.n_max},
                   {"checks", r.checks},
                   {"failures", r.failures},
                   {"passed", r.passed()}};
          if (!r.passed()) {
            row["first_failure"] = r.first_failure;
          }
          suites.push_back(row);
        }
        out << json{{"n_max", n_max}, {"suites", suites}, {"passed", all_ok}}
                   .dump()
            << '\n';
      } else if (g.format == Format::csv) {
        out << "suite,n_max,checks,failures,result\n";
        for (auto const& r : results) {
          out << r.name << ',' << r.n_max << ',' << r.checks << ','
              << r.failures << ',' << (r.passed() ? "pass" : "FAIL") << '\n';
        }
      } else {
        for (auto const& r : results) {
          out << (r.passed() ? "pass  " : "FAIL  ") << r.name
              << "  (n <= " << r.n_max << ", " << r.checks << " checks)  "
              << r.claim << '\n';
          if (!r.passed()) {
            out << "      " << r.failures << " failures, first at "
                << r.first_failure << '\n';
          }
        }
        out << (all_ok ? "all suites passed" : "SOME SUITES FAILED") << " in "
            << std::fixed << std::setprecision(2) << seconds << " s\n";
      }
      return all_ok ? success : negative;
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Partition-preserving transformation semigroups",
                 "partsemi"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    std::map<std::string, Format> const formats{
        {"lines", Format::lines}, {"json", Format::json}, {"csv", Format::csv}};
    app.add_option("--format", g.format, "Output format: lines, json, csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--limit", g.limit, "Stop enumerations after N maps");
    app.add_option("--guard", g.guard, "Cap on brute-force or summation work")
        ->capture_default_str();

    auto* check = app.add_subcommand("check", "Test a membership predicate");
    CheckArgs check_args;
    check->add_option("-p,--partition", check_args.partition)->required();
    check->add_option("-f,--map", check_args.map)->required();
    check->add_option("--predicate", check_args.predicate)
        ->required()
        ->check(CLI::IsMember({"preserves",
                               "sigma",
                               "sigma-character",
                               "sigma-topology",
                               "estar",
                               "units",
                               "idempotent",
                               "sigma-idempotent"}));

    auto* character_cmd
        = app.add_subcommand("character", "Print the character and block maps");
    std::string char_partition, char_map;
    character_cmd->add_option("-p,--partition", char_partition)->required();
    character_cmd->add_option("-f,--map", char_map)->required();

    auto*     count = app.add_subcommand("count", "Exact cardinalities");
    CountArgs count_args;
    auto*     count_p = count->add_option("-p,--partition", count_args.partition);
    auto*     count_profile
        = count->add_option("--profile", count_args.profile,
                            "size:multiplicity pairs, e.g. 2:1,1:1");
    count_p->excludes(count_profile);
    count->add_option("--set", count_args.set)
        ->required()
        ->check(CLI::IsMember({"T", "Sigma", "S", "E-Sigma"}));
    count->add_option("--method", count_args.method, "Sigma only")
        ->check(CLI::IsMember({"grouped", "direct"}));

    auto* enumerate = app.add_subcommand("enumerate", "List the maps of a set");
    EnumerateArgs enum_args;
    enumerate->add_option("-p,--partition", enum_args.partition)->required();
    enumerate->add_option("--set", enum_args.set)
        ->required()
        ->check(CLI::IsMember({"T", "Sigma", "S", "E-Sigma", "E-T"}));
    enumerate->add_option("--strategy", enum_args.strategy)
        ->check(CLI::IsMember({"brute", "constructive"}));

    auto* quotient = app.add_subcommand("quotient", "Classes of Σ by character");
    std::string quotient_partition;
    size_t      representatives = 0;
    quotient->add_option("-p,--partition", quotient_partition)->required();
    quotient->add_option("--representatives", representatives,
                         "Maps to list per class");

    auto* find = app.add_subcommand("find-partition",
                                    "A nontrivial partition preserved by a map");
    std::string           find_map;
    std::optional<size_t> find_blocks;
    bool                  find_verify = false;
    find->add_option("-f,--map", find_map)->required();
    find->add_option("-m,--blocks", find_blocks,
                     "Block count, for a single full cycle");
    find->add_flag("--verify", find_verify, "Re-check the answer");

    auto*  verify = app.add_subcommand("verify", "Run the verification matrix");
    size_t n_max  = 5;
    verify->add_option("--n-max", n_max)->capture_default_str();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return success;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }

    try {
      if (*check) {
        return cmd_check(check_args, g, out);
      }
      if (*character_cmd) {
        return cmd_character(char_partition, char_map, g, out);
      }
      if (*count) {
        return cmd_count(count_args, g, out);
      }
      if (*enumerate) {
        return cmd_enumerate(enum_args, g, out);
      }
      if (*quotient) {
        return cmd_quotient(quotient_partition, representatives, g, out);
      }
      if (*find) {
        return cmd_find_partition(find_map, find_blocks, find_verify, g, out, err);
      }
      return cmd_verify(n_max, g, out);
    } catch (GuardError const& e) {
      err << "guard: " << e.what() << '\n';
      return guard_error;
    } catch (std::invalid_argument const& e) {
      // parse errors, size mismatches, and domain errors
      err << "error: " << e.what() << '\n';
      return input_error;
    } catch (InputError const& e) {
      err << "error: " << e.what() << '\n';
      return input_error;
    }
  }

}  // namespace partsemi::cli
