#include "skewpc/job.hpp"

#include <sstream>

#include "json.hpp"
#include "skewpc/class_counting.hpp"

namespace skewpc {

namespace {

using nlohmann::json;

Command parse_command(const std::string& name) {
  if (name == "info") return Command::Info;
  if (name == "central") return Command::Central;
  if (name == "equiv") return Command::Equiv;
  if (name == "classes") return Command::Classes;
  if (name == "count") return Command::Count;
  if (name == "verify-paper") return Command::VerifyPaper;
  raise(ErrorCode::ParseError, "unknown command '" + name + "'");
}

std::pair<RingPtr, SigmaPtr> build_context(const ParsedConfig& cfg) {
  if (!cfg.ring) raise(ErrorCode::ParseError, "configuration does not define a ring");
  RingPtr ring = ChainRing::build(*cfg.ring);
  SigmaPtr sigma;
  if (cfg.sigma.u_image || cfg.sigma.omega_exponent)
    sigma = RingAutomorphism::build(ring, cfg.sigma);
  else
    sigma = RingAutomorphism::identity(ring);
  return {std::move(ring), std::move(sigma)};
}

ElemId element_from(const ChainRing& R, const std::vector<std::uint32_t>& coords) {
  return R.from_coords(coords);
}

json element_json(const ChainRing& R, ElemId a) {
  return json{{"id", a}, {"coords", R.coords(a)}, {"text", R.to_string(a)}};
}

json binomial_json(const ChainRing& R, const Binomial& b) {
  return json{{"ell", b.ell},
              {"a0", element_json(R, b.a0)},
              {"aell", element_json(R, b.a_ell)},
              {"text", b.to_string(R)}};
}

std::uint32_t need_n(const ParsedConfig& cfg) {
  if (!cfg.n) raise(ErrorCode::ParseError, "missing parameter n");
  return *cfg.n;
}
std::uint32_t need_ell(const ParsedConfig& cfg) {
  if (!cfg.ell) raise(ErrorCode::ParseError, "missing parameter ell");
  return *cfg.ell;
}

JobResult emit(const JobSpec& job, const json& report, const std::string& text, int code = 0) {
  JobResult res;
  res.exit_code = code;
  if (job.json)
    res.output = report.dump(2) + "\n";
  else
    res.output = text;
  return res;
}

JobResult run_info(const JobSpec& job, const RingPtr& ring, const SigmaPtr& sigma) {
  const ChainRing& R = *ring;
  auto decomp = decompose_U(R);

  json j;
  j["schema"] = "skewpc.info/1";
  j["ring"] = {
      {"presentation", R.presentation().describe()},
      {"size", R.size()},
      {"p", R.p()},
      {"r", R.r()},
      {"e", R.e()},
      {"q", R.q()},
      {"gamma", element_json(R, R.gamma())},
      {"gamma_note", "distinguished maximal-ideal generator taken from the presentation"},
      {"units", R.units().size()},
      {"teichmuller_star", R.teichmuller_star().size()},
      {"one_plus_gamma", R.unit_one_plus_gamma().size()},
      {"u_invariant_factors", decomp.orders},
  };
  j["sigma"] = {
      {"order", sigma->order()},
      {"residue_order", sigma->residue_order()},
      {"teichmuller_exponent", sigma->teich_exponent()},
      {"fixed_subring_size", sigma->fixed_subring().size()},
      {"fixed_units", sigma->fixed_units().size()},
      {"gamma_image", element_json(R, sigma->apply(R.gamma()))},
      {"identity", sigma->is_identity()},
  };

  std::ostringstream os;
  os << "ring: " << R.presentation().describe() << "\n";
  os << "|R| = " << R.size() << " = q^e with q = " << R.q() << ", e = " << R.e()
     << ", p = " << R.p() << ", r = " << R.r() << "\n";
  os << "gamma = " << R.to_string(R.gamma())
     << "  (distinguished generator from the presentation)\n";
  os << "units: " << R.units().size() << ", |T*| = " << R.teichmuller_star().size()
     << ", |1+gamma R| = " << R.unit_one_plus_gamma().size() << "\n";
  os << "U invariant factors: ";
  for (std::size_t i = 0; i < decomp.orders.size(); ++i) os << (i ? "," : "") << decomp.orders[i];
  os << "\n";
  os << "sigma: order " << sigma->order() << ", residue order " << sigma->residue_order()
     << ", teichmuller exponent " << sigma->teich_exponent() << ", |R^sigma| = "
     << sigma->fixed_subring().size() << "\n";
  os << "sigma(gamma) = " << R.to_string(sigma->apply(R.gamma())) << "\n";
  return emit(job, j, os.str());
}

JobResult run_central(const JobSpec& job, const RingPtr& ring, const SigmaPtr& sigma) {
  const ChainRing& R = *ring;
  Trinomial f{need_n(job.cfg), need_ell(job.cfg), 0, 0};
  if (!job.cfg.a0 || !job.cfg.aell) raise(ErrorCode::ParseError, "central requires a0 and aell");
  f.a0 = element_from(R, *job.cfg.a0);
  f.a_ell = element_from(R, *job.cfg.aell);

  CentralityReport rep = is_central(f.to_poly(sigma));

  json j;
  j["schema"] = "skewpc.central/1";
  j["f"] = f.to_string(R);
  j["coeffs"] = json::array();
  for (ElemId c : f.coeff_vector(R)) j["coeffs"].push_back(element_json(R, c));
  j["central"] = rep.central;
  j["failed_condition"] = rep.failed_condition;
  j["detail"] = rep.detail;

  std::ostringstream os;
  os << "f = " << f.to_string(R) << "\n";
  os << "central: " << (rep.central ? "yes" : "no");
  if (!rep.central) os << "  (" << rep.detail << ")";
  os << "\n";
  if (sigma->is_identity()) {
    j["support_condition"] = nullptr;
    j["commutative_case"] = true;
    os << "sigma is the identity: the commutative case, every monic polynomial is central;"
       << " the support condition is not defined\n";
  } else {
    bool member = in_fixed_support_set(*sigma, f.coeff_vector(R));
    j["support_condition"] = member;
    j["commutative_case"] = false;
    os << "coefficients lie in the fixed subring with support divisible by mu: "
       << (member ? "yes" : "no") << "\n";
  }
  return emit(job, j, os.str());
}

JobResult run_equiv(const JobSpec& job, const RingPtr& ring, const SigmaPtr& sigma) {
  const ChainRing& R = *ring;
  std::uint32_t n = need_n(job.cfg), ell = need_ell(job.cfg);
  if (!job.cfg.a0 || !job.cfg.aell || !job.cfg.b0 || !job.cfg.bell)
    raise(ErrorCode::ParseError, "equiv requires a0, aell, b0 and bell");
  Binomial a{ell, element_from(R, *job.cfg.aell), element_from(R, *job.cfg.a0)};
  Binomial b{ell, element_from(R, *job.cfg.bell), element_from(R, *job.cfg.b0)};

  EquivalenceReport rep = equivalent(sigma, a, b, n);

  json j;
  j["schema"] = "skewpc.equiv/1";
  j["n"] = n;
  j["a"] = binomial_json(R, a);
  j["b"] = binomial_json(R, b);
  j["verdict"] = rep.verdict;
  j["alpha"] = rep.witness_alpha ? element_json(R, *rep.witness_alpha) : json(nullptr);
  j["conditions"] = {{"c2", rep.c2}, {"c4", rep.c4}};

  std::ostringstream os;
  os << "a(x) = " << a.to_string(R) << ", b(x) = " << b.to_string(R) << ", n = " << n << "\n";
  if (rep.verdict)
    os << "equivalent: yes, witness alpha = " << R.to_string(*rep.witness_alpha) << "\n";
  else
    os << "equivalent: no (no unit satisfies the coefficient conditions)\n";
  return emit(job, j, os.str());
}

JobResult run_classes(const JobSpec& job, const RingPtr& ring, const SigmaPtr& sigma) {
  const ChainRing& R = *ring;
  std::uint32_t n = need_n(job.cfg), ell = need_ell(job.cfg);
  auto classes = equivalence_classes(sigma, n, ell, job.budget);

  json j;
  j["schema"] = "skewpc.classes/1";
  j["n"] = n;
  j["ell"] = ell;
  j["subgroup"] = json::array();
  for (const auto& h : classes.subgroup) j["subgroup"].push_back(binomial_json(R, h));
  j["class_count"] = classes.classes.size();
  j["class_size"] = classes.subgroup.size();
  j["classes"] = json::array();
  for (const auto& cls : classes.classes) {
    json c = json::array();
    for (const auto& m : cls) c.push_back(binomial_json(R, m));
    j["classes"].push_back(std::move(c));
  }

  std::ostringstream os;
  os << classes.classes.size() << " classes of size " << classes.subgroup.size() << "\n";
  os << "subgroup: ";
  for (std::size_t i = 0; i < classes.subgroup.size(); ++i)
    os << (i ? ", " : "") << classes.subgroup[i].to_string(R);
  os << "\n";
  if (!job.quiet)
    for (const auto& cls : classes.classes) {
      os << "  class:";
      for (const auto& m : cls) os << "  " << m.to_string(R);
      os << "\n";
    }
  return emit(job, j, os.str());
}

JobResult run_count(const JobSpec& job, const RingPtr&, const SigmaPtr& sigma) {
  std::uint32_t n = need_n(job.cfg), ell = need_ell(job.cfg);

  try {
    CountReport rep = h_size_report(*sigma, n, ell);
    json j;
    j["schema"] = "skewpc.count/1";
    j["hypothesis_satisfied"] = true;
    j["ker_T"] = rep.ker_T;
    j["ker_U"] = rep.ker_U;
    j["ker_total"] = rep.ker_total;
    j["H_size"] = rep.H_size;
    j["brute_ker"] = rep.brute_ker;
    j["brute_H"] = rep.brute_H;
    j["consistent"] = rep.consistent;
    j["u_invariant_factors"] = rep.decomposition.orders;

    std::ostringstream os;
    os << "ker_T = " << rep.ker_T << ", ker_U = " << rep.ker_U << ", ker = " << rep.ker_total
       << "\n";
    os << "H size (formula) = " << rep.H_size << ", brute kernel = " << rep.brute_ker
       << ", brute image = " << rep.brute_H << "\n";
    os << "consistent: " << (rep.consistent ? "yes" : "NO") << "\n";
    int code = rep.consistent ? 0 : int(ErrorCode::Inconsistent);
    return emit(job, j, os.str(), code);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::HypothesisViolated) throw;
    // outside the hypotheses the image is still a well-defined set; report
    // its raw size, flagged, with a nonzero exit status
    std::uint64_t image = theta_image_size(*sigma, n, ell);
    json j;
    j["schema"] = "skewpc.count/1";
    j["hypothesis_satisfied"] = false;
    j["image_size"] = image;
    j["note"] = "image size (hypotheses violated)";
    std::ostringstream os;
    os << "hypotheses violated: n and ell are not both divisible by the order of sigma\n";
    os << "raw theta image size = " << image << "\n";
    return emit(job, j, os.str(), int(ErrorCode::HypothesisViolated));
  }
}

JobResult run_verify_paper(const JobSpec& job) {
  auto checks = run_paper_checks();
  bool all = true;
  json j;
  j["schema"] = "skewpc.paper/1";
  j["checks"] = json::array();
  std::ostringstream os;
  for (const auto& c : checks) {
    all = all && c.pass;
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty() && (!c.pass || !job.quiet)) os << ": " << c.detail;
    os << "\n";
  }
  j["all_pass"] = all;
  os << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return emit(job, j, os.str(), all ? 0 : int(ErrorCode::VerifyFailed));
}

}  // namespace

Command command_from_name(const std::string& name) { return parse_command(name); }

std::string isometry_report_json(const ChainRing& ring, const IsometryReport& report) {
  json j;
  j["schema"] = "skewpc.isometry/1";
  j["verdict"] = report.verdict;
  j["witness"] = element_json(ring, report.alpha);
  j["mode"] = report.mode;
  j["well_defined"] = report.well_defined;
  j["bijective"] = report.bijective;
  j["weight_preserving"] = report.weight_preserving;
  j["additive"] = report.additive;
  j["multiplicative"] = report.multiplicative;
  j["elements_swept"] = report.elements_swept;
  j["pairs_checked"] = report.pairs_checked;
  j["violations"] = report.violations;
  j["ideals"] = json::array();
  for (const auto& chk : report.ideals) {
    json entry;
    entry["generator"] = chk.generator;
    entry["size"] = chk.size;
    entry["skipped"] = chk.skipped;
    entry["weights_match"] = chk.weights_match;
    entry["image_is_ideal"] = chk.image_is_ideal;
    entry["image_matches_generated"] = chk.image_matches_generated;
    json weights = json::array(), counts = json::array();
    for (std::size_t w = 0; w < chk.weights.size(); ++w)
      if (chk.weights[w] != 0) {
        weights.push_back(w);
        counts.push_back(chk.weights[w]);
      }
    entry["weights"] = std::move(weights);
    entry["counts"] = std::move(counts);
    j["ideals"].push_back(std::move(entry));
  }
  return j.dump(2);
}

JobResult run_job(const JobSpec& job) {
  try {
    if (job.command == Command::VerifyPaper) return run_verify_paper(job);
    auto [ring, sigma] = build_context(job.cfg);
    switch (job.command) {
      case Command::Info: return run_info(job, ring, sigma);
      case Command::Central: return run_central(job, ring, sigma);
      case Command::Equiv: return run_equiv(job, ring, sigma);
      case Command::Classes: return run_classes(job, ring, sigma);
      case Command::Count: return run_count(job, ring, sigma);
      case Command::VerifyPaper: break;
    }
    raise(ErrorCode::Internal, "unhandled command");
  } catch (const Error& err) {
    json j;
    j["error"] = {{"code", int(err.code())},
                  {"name", error_code_name(err.code())},
                  {"message", err.what()}};
    JobResult res;
    res.exit_code = int(err.code());
    if (job.json)
      res.output = j.dump(2) + "\n";
    else
      res.output = std::string("error [") + error_code_name(err.code()) + "]: " + err.what() + "\n";
    return res;
  } catch (const std::exception& ex) {
    JobResult res;
    res.exit_code = int(ErrorCode::Internal);
    res.output = std::string("internal error: ") + ex.what() + "\n";
    return res;
  }
}

}  // namespace skewpc
