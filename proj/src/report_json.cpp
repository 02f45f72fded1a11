#include "cayley/report_json.hpp"

#include <cinttypes>
#include <cstdio>
#include <sstream>

namespace cayley {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ojson rational_json(const BigRat& r) {
  ojson j;
  j["num"] = to_json(boost::multiprecision::numerator(r));
  j["den"] = to_json(boost::multiprecision::denominator(r));
  return j;
}

ojson proportion_json(std::uint64_t num, std::uint64_t den) {
  ojson j;
  j["num"] = num;
  j["den"] = den;
  j["value"] = den ? static_cast<double>(num) / static_cast<double>(den) : 0.0;
  return j;
}

ojson bound_json(const BoundExponent& b, const BigInt* count) {
  ojson j;
  j["exponent"] = rational_json(b.exponent);
  j["exponent_floor"] = rational_json(b.exponent_floor);
  j["log2_exact"] = b.log2_exact;
  if (count) {
    j["count"] = to_json(*count);
    j["holds"] = b.admits(*count);
  } else {
    j["count"] = nullptr;
    j["holds"] = nullptr;
  }
  return j;
}

ojson elements_json(const Bitset& b) {
  ojson arr = ojson::array();
  for (unsigned e : bitset_elements(b)) arr.push_back(e);
  return arr;
}

}  // namespace

ojson to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::uint64_t{1} << 53)) return ojson(v.convert_to<std::uint64_t>());
  return ojson(v.str());
}

ojson classification_json(const GroupContext& ctx, const Bitset& s, Mode mode,
                          const Classification& c) {
  ojson j;
  j["group"] = ctx.group.spec_string();
  j["set"] = connection_set_string(s);
  j["set_mask"] = bitset_hex(s);
  j["mode"] = mode_name(mode);
  j["aut_order"] = to_json(c.aut_order);
  j["is_drr"] = c.is_drr;
  if (c.is_small.has_value())
    j["is_small"] = *c.is_small;
  else
    j["is_small"] = nullptr;
  if (c.wreath) {
    ojson w;
    w["H"] = elements_json(ctx.subgroups[c.wreath->h_index].members);
    w["K"] = elements_json(ctx.subgroups[c.wreath->k_index].members);
    j["gw"] = w;
  } else {
    j["gw"] = nullptr;
  }
  ojson nor = ojson::array();
  for (std::size_t i : c.normalizers) {
    ojson imgs = ojson::array();
    for (Elem e : ctx.automorphisms[i].images) imgs.push_back(e);
    nor.push_back(imgs);
  }
  j["nor"] = nor;
  if (c.product) {
    const ProductDecomposition& d = ctx.decompositions[c.product->decomp_index];
    ojson e;
    e["C"] = elements_json(ctx.subgroups[d.c_index].members);
    e["Z"] = elements_json(ctx.subgroups[d.z_index].members);
    e["sprime_tag"] = sprime_tag_name(c.product->tag);
    e["sdoubleprime"] = elements_json(c.product->s_z);
    j["ex"] = e;
  } else {
    j["ex"] = nullptr;
  }
  j["canonical_form"] = c.canonical_hex;
  return j;
}

std::string classification_text(const GroupContext& ctx, const Bitset& s, Mode mode,
                                const Classification& c) {
  std::ostringstream os;
  os << "group " << ctx.group.spec_string() << "  set {" << connection_set_string(s) << "}  mode "
     << mode_name(mode) << "\n";
  os << "aut_order " << c.aut_order.str() << "\n";
  os << "is_drr " << (c.is_drr ? "true" : "false") << "\n";
  if (c.is_small.has_value()) os << "is_small " << (*c.is_small ? "true" : "false") << "\n";
  if (c.wreath)
    os << "gw_witness H={" << connection_set_string(ctx.subgroups[c.wreath->h_index].members)
       << "} K={" << connection_set_string(ctx.subgroups[c.wreath->k_index].members) << "}\n";
  else
    os << "gw_witness none\n";
  os << "nor_witnesses " << c.normalizers.size() << "\n";
  for (std::size_t i : c.normalizers)
    os << "  " << perm_cycle_string(Perm(ctx.automorphisms[i].images.begin(),
                                         ctx.automorphisms[i].images.end()))
       << "\n";
  if (c.product) {
    const ProductDecomposition& d = ctx.decompositions[c.product->decomp_index];
    os << "ex_witness C={" << connection_set_string(ctx.subgroups[d.c_index].members) << "} Z={"
       << connection_set_string(ctx.subgroups[d.z_index].members) << "} S'="
       << sprime_tag_name(c.product->tag) << " S''={" << connection_set_string(c.product->s_z)
       << "}\n";
  } else if (mode == Mode::graph) {
    os << "ex_witness none\n";
  }
  os << "canonical_form " << c.canonical_hex << "\n";
  os << "adjacency:\n" << build_cayley(ctx.group, s).adjacency_list();
  return os.str();
}

ojson census_json(const CensusReport& rep) {
  ojson j;
  j["group"] = rep.group_spec;
  j["mode"] = mode_name(rep.mode);
  j["n"] = rep.n;
  j["m"] = rep.m;
  j["prime_power"] = rep.prime_power;
  ojson totals;
  totals["subsets"] = rep.totals.subsets;
  totals["drr_or_small"] = rep.totals.good_target;
  totals["gw"] = rep.totals.gw;
  totals["gw_raw"] = rep.totals.gw_raw;
  totals["nor"] = rep.totals.nor;
  totals["ex"] = rep.totals.ex;
  totals["bad"] = rep.totals.bad;
  totals["good"] = rep.totals.good;
  j["totals"] = totals;
  ojson props;
  props["good"] = proportion_json(rep.totals.good, rep.totals.subsets);
  props["drr_or_small"] = proportion_json(rep.totals.good_target, rep.totals.subsets);
  j["proportions"] = props;

  const BigInt not_good = BigInt(rep.totals.subsets) - rep.totals.good_target;
  const BigInt gw_count = rep.totals.gw;
  const BigInt nor_count = rep.totals.nor;
  const BigInt ex_count = rep.totals.ex;
  ojson bounds;
  if (rep.mode == Mode::digraph) {
    bounds["thm_epsilon1"] = bound_json(rep.bounds.thm_epsilon1, &not_good);
    bounds["thm_epsilon2"] = bound_json(rep.bounds.thm_epsilon2, nullptr);
    bounds["lemma_gw_digraph"] = bound_json(rep.bounds.lemma_gw_digraph, &gw_count);
    bounds["lemma_nor_digraph"] = bound_json(rep.bounds.lemma_nor_digraph, &nor_count);
    bounds["lemma_ex"] = bound_json(rep.bounds.lemma_ex, nullptr);
    bounds["lemma_gw_graph"] = bound_json(rep.bounds.lemma_gw_graph, nullptr);
    bounds["lemma_nor_graph"] = bound_json(rep.bounds.lemma_nor_graph, nullptr);
  } else {
    bounds["thm_epsilon1"] = bound_json(rep.bounds.thm_epsilon1, nullptr);
    bounds["thm_epsilon2"] = bound_json(rep.bounds.thm_epsilon2, &not_good);
    bounds["lemma_gw_digraph"] = bound_json(rep.bounds.lemma_gw_digraph, nullptr);
    bounds["lemma_nor_digraph"] = bound_json(rep.bounds.lemma_nor_digraph, nullptr);
    bounds["lemma_ex"] = bound_json(rep.bounds.lemma_ex, &ex_count);
    bounds["lemma_gw_graph"] = bound_json(rep.bounds.lemma_gw_graph, &gw_count);
    bounds["lemma_nor_graph"] = bound_json(rep.bounds.lemma_nor_graph, &nor_count);
  }
  j["bounds"] = bounds;
  ojson viols = ojson::array();
  for (std::uint64_t v : rep.violations) viols.push_back(v);
  j["violations"] = viols;
  j["solver_nodes"] = rep.solver_nodes;
  return j;
}

std::string census_csv(const CensusReport& rep, bool header) {
  std::ostringstream os;
  if (header)
    os << "group,mode,n,m,subsets,drr_or_small,gw,gw_raw,nor,ex,bad,good,"
          "proportion_good,proportion_drr_or_small,violations\n";
  os << '"' << rep.group_spec << '"' << ',' << mode_name(rep.mode) << ',' << rep.n << ',' << rep.m
     << ',' << rep.totals.subsets << ',' << rep.totals.good_target << ',' << rep.totals.gw << ','
     << rep.totals.gw_raw << ',' << rep.totals.nor << ',' << rep.totals.ex << ',' << rep.totals.bad
     << ',' << rep.totals.good << ','
     << fmt_double(static_cast<double>(rep.totals.good) / static_cast<double>(rep.totals.subsets))
     << ','
     << fmt_double(static_cast<double>(rep.totals.good_target) /
                   static_cast<double>(rep.totals.subsets))
     << ',' << rep.violations.size() << '\n';
  return os.str();
}

std::string census_text(const CensusReport& rep) {
  std::ostringstream os;
  os << "census: group " << rep.group_spec << " (n=" << rep.n << ", m=" << rep.m << ", "
     << mode_name(rep.mode) << (rep.prime_power ? ", prime power" : "") << ")\n";
  os << "  subsets      " << rep.totals.subsets << "\n";
  os << "  drr_or_small " << rep.totals.good_target << "\n";
  os << "  gw           " << rep.totals.gw << " (raw " << rep.totals.gw_raw << ")\n";
  os << "  nor          " << rep.totals.nor << "\n";
  os << "  ex           " << rep.totals.ex << "\n";
  os << "  bad          " << rep.totals.bad << "\n";
  os << "  good         " << rep.totals.good << "\n";
  os << "  violations   " << rep.violations.size() << "\n";
  for (std::uint64_t v : rep.violations) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "0x%" PRIx64, v);
    os << "    offending subset mask " << buf << "\n";
  }
  return os.str();
}

ojson sample_json(const SampleReport& rep) {
  ojson j;
  j["group"] = rep.group_spec;
  j["mode"] = mode_name(rep.mode);
  j["trials"] = rep.trials;
  j["seed"] = rep.seed;
  j["hits"] = rep.hits;
  j["estimate"] = rep.estimate;
  ojson ci;
  ci["low"] = rep.ci_low;
  ci["high"] = rep.ci_high;
  j["ci99"] = ci;
  return j;
}

std::string sample_csv(const SampleReport& rep, bool header) {
  std::ostringstream os;
  if (header) os << "group,mode,trials,seed,hits,estimate,ci99_low,ci99_high\n";
  os << '"' << rep.group_spec << '"' << ',' << mode_name(rep.mode) << ',' << rep.trials << ','
     << rep.seed << ',' << rep.hits << ',' << fmt_double(rep.estimate) << ','
     << fmt_double(rep.ci_low) << ',' << fmt_double(rep.ci_high) << '\n';
  return os.str();
}

ojson unlabeled_json(const UnlabeledReport& rep) {
  ojson j;
  j["group"] = rep.group_spec;
  j["mode"] = mode_name(rep.mode);
  j["orbit_count"] = to_json(rep.orbit_count);
  j["iso_classes"] = rep.iso_classes;
  j["good_iso_classes"] = rep.good_iso_classes;
  j["lower_bound_num"] = to_json(boost::multiprecision::numerator(rep.lower_bound));
  j["lower_bound_den"] = to_json(boost::multiprecision::denominator(rep.lower_bound));
  j["ratio"] = rep.ratio;
  return j;
}

ojson bounds_json(unsigned n, unsigned m) {
  BoundSet b = bound_set(n, m);
  ojson j;
  j["n"] = n;
  j["m"] = m;
  ojson bounds;
  bounds["thm_epsilon1"] = bound_json(b.thm_epsilon1, nullptr);
  bounds["thm_epsilon2"] = bound_json(b.thm_epsilon2, nullptr);
  bounds["lemma_gw_digraph"] = bound_json(b.lemma_gw_digraph, nullptr);
  bounds["lemma_nor_digraph"] = bound_json(b.lemma_nor_digraph, nullptr);
  bounds["lemma_ex"] = bound_json(b.lemma_ex, nullptr);
  bounds["lemma_gw_graph"] = bound_json(b.lemma_gw_graph, nullptr);
  bounds["lemma_nor_graph"] = bound_json(b.lemma_nor_graph, nullptr);
  j["bounds"] = bounds;
  return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace cayley
