#include "cmw/interp.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cmw/campaign.hpp"
#include "cmw/invariants.hpp"
#include "cmw/resolution.hpp"
#include "cmw/theorems.hpp"
#include "cmw/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmw {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

// ===== on-disk resolution cache =====

class DiskCache {
 public:
  explicit DiskCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
  }

  std::optional<std::string> load(const std::string& key) const {
    std::ifstream in(path(key), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
  }

  // Atomic write (pid-unique tmp + rename) so readers never observe partial
  // files; an advisory flock serializes concurrent CLI writers.
  void store(const std::string& key, const std::string& payload) const {
    std::error_code ec;
    fs::path tmp = fs::path(dir_) / (key + ".tmp." + std::to_string(::getpid()));
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << payload;
    }
    int fd = ::open((fs::path(dir_) / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
    if (fd >= 0) ::flock(fd, LOCK_EX);
    fs::rename(tmp, path(key), ec);
    if (fd >= 0) {
      ::flock(fd, LOCK_UN);
      ::close(fd);
    }
  }

 private:
  fs::path path(const std::string& key) const { return fs::path(dir_) / (key + ".res"); }
  std::string dir_;
};

std::string resolve_cache_dir(const ExecOptions& opt) {
  if (!opt.cache_dir.empty()) return opt.cache_dir;
  if (const char* env = std::getenv("CMW_CACHE_DIR"); env && *env) return env;
  return ".cmw-cache";
}

// ===== payload builders =====

ojson json_pd(const PdResult& pd) {
  ojson j;
  j["kind"] = pd.exact ? "exact" : "greater-than";
  j["value"] = pd.value;
  return j;
}

ojson json_cert(const CertifiedValue& c) {
  ojson j;
  j["value"] = c.value;
  switch (c.cert) {
    case CertifiedValue::Cert::proved: j["certainty"] = "proved"; break;
    case CertifiedValue::Cert::bounded:
      j["certainty"] = "certified-up-to-bound";
      j["bound"] = c.bound;
      break;
    case CertifiedValue::Cert::unknown: j["certainty"] = "unknown"; break;
  }
  return j;
}

ojson json_invariants(const InvariantReport& r) {
  ojson j;
  j["depth"] = r.depth;
  j["dim"] = r.dim;
  j["cmd"] = r.cmd;
  j["pd"] = json_pd(r.pd);
  j["is_cm"] = r.is_cm;
  j["is_maximal_cm"] = r.is_max_cm;
  ojson s;
  for (const auto& [k, v] : r.serre) s["S_" + std::to_string(k)] = v;
  j["serre"] = s;
  j["gdim"] = json_cert(r.gdim);
  ojson p;
  p["established"] = r.perfect.established;
  if (r.perfect.established) p["value"] = r.perfect.value;
  j["perfect"] = p;
  if (r.with_n) {
    j["grade_vs"] = r.grade_vs;
    j["imp_vs"] = r.imp_vs;
    ojson np;
    np["established"] = r.n_perfect.established;
    if (r.n_perfect.established) np["value"] = r.n_perfect.value;
    j["n_perfect"] = np;
  }
  return j;
}

ojson json_module_summary(const ModulePtr& M) {
  ModulePtr m = M->minimal();
  ojson j;
  j["gens"] = m->ngens();
  j["gen_degrees"] = m->row_degs();
  j["rels"] = m->nrels();
  return j;
}

ojson json_verdict(const Verdict& v) {
  ojson j;
  j["id"] = stmt_name(v.id);
  ojson hyps = ojson::array();
  for (const auto& h : v.hyps) {
    ojson hj;
    hj["name"] = h.name;
    hj["status"] = hyp_status_name(h.status);
    if (!h.witness.empty()) hj["witness"] = h.witness;
    hyps.push_back(hj);
  }
  j["hypotheses"] = hyps;
  j["applicable"] = v.applicable;
  j["conclusion"] = v.conclusion == Verdict::Conclusion::holds
                        ? "holds"
                        : (v.conclusion == Verdict::Conclusion::fails ? "fails" : "skipped");
  j["consistent"] = v.consistent;
  j["detail"] = v.detail;
  return j;
}

ojson json_campaign(const CampaignSummary& s, bool timings) {
  ojson j;
  j["checks"] = s.checks;
  j["applicable"] = s.applicable;
  j["consistent"] = s.consistent;
  j["inapplicable"] = s.inapplicable;
  ojson f = ojson::array();
  for (const auto& x : s.failures) {
    ojson fj;
    fj["statement"] = stmt_name(x.id);
    fj["instance"] = x.instance;
    if (x.n >= 0) fj["n"] = x.n;
    fj["record"] = x.serialized;
    f.push_back(fj);
  }
  j["failures"] = f;
  if (timings) j["wall_ms"] = s.wall_ms;
  return j;
}

std::string indent_block(const std::string& s) {
  std::istringstream is(s);
  std::ostringstream os;
  std::string line;
  while (std::getline(is, line)) os << "    " << line << "\n";
  return os.str();
}

std::string text_invariants(const InvariantReport& r) {
  std::ostringstream os;
  os << "depth " << r.depth << "   dim " << r.dim << "   cmd " << r.cmd << "   pd " << r.pd.str()
     << "\n";
  os << "CM " << (r.is_cm ? "yes" : "no") << "   maximal-CM " << (r.is_max_cm ? "yes" : "no")
     << "   gdim " << r.gdim.str() << "\n";
  os << "serre:";
  for (const auto& [k, v] : r.serre) os << "  S_" << k << " " << (v ? "yes" : "no");
  os << "\n";
  if (r.perfect.established) os << "perfect " << (r.perfect.value ? "yes" : "no") << "\n";
  if (r.with_n) {
    os << "grade(M,N) " << r.grade_vs << "   imp(M,N) " << r.imp_vs;
    if (r.n_perfect.established)
      os << "   N-perfect " << (r.n_perfect.value ? "yes" : "no");
    else
      os << "   N-perfect not-established";
    os << "\n";
  }
  return os.str();
}

std::string text_verdict(const Verdict& v) {
  std::ostringstream os;
  os << stmt_name(v.id) << ": " << (v.applicable ? "applicable" : "inapplicable") << ", conclusion "
     << (v.conclusion == Verdict::Conclusion::holds
             ? "holds"
             : (v.conclusion == Verdict::Conclusion::fails ? "FAILS" : "skipped"))
     << ", consistent " << (v.consistent ? "yes" : "NO") << "\n";
  for (const auto& h : v.hyps) {
    os << "  hyp " << h.name << ": " << hyp_status_name(h.status);
    if (!h.witness.empty()) os << " (" << h.witness << ")";
    os << "\n";
  }
  if (!v.detail.empty()) os << "  " << v.detail << "\n";
  return os.str();
}

}  // namespace

Report execute(const Script& script, const ExecOptions& opt) {
#ifdef _OPENMP
  if (opt.threads > 0) omp_set_num_threads(opt.threads);
#endif
  std::shared_ptr<DiskCache> disk;
  if (!opt.no_cache) {
    disk = std::make_shared<DiskCache>(resolve_cache_dir(opt));
    ResolutionCache::instance().load_hook = [disk](const std::string& k) {
      return disk->load(k);
    };
    ResolutionCache::instance().store_hook = [disk](const std::string& k, const std::string& p) {
      disk->store(k, p);
    };
  } else {
    ResolutionCache::instance().load_hook = nullptr;
    ResolutionCache::instance().store_hook = nullptr;
  }

  Report rep;
  rep.tool_version = std::string(kToolName) + " " + kToolVersion;
  {
    Fnv1a h;
    h.feed(print_script(script));
    rep.input_fingerprint = hex64(h.value());
  }

  int index = -1;
  for (const auto& st : script.stmts) {
    ++index;
    bool is_command = st.kind != Stmt::Kind::ring_poly && st.kind != Stmt::Kind::ring_quot &&
                      st.kind != Stmt::Kind::ideal_decl && st.kind != Stmt::Kind::module_decl;
    if (!is_command) continue;

    CommandOutcome out;
    out.index = index;
    out.target = st.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      switch (st.kind) {
        case Stmt::Kind::invariants: {
          out.kind = "invariants";
          ModulePtr M = script.modules.at(st.name);
          ModulePtr N = st.arg2.empty() ? nullptr : script.modules.at(st.arg2);
          InvariantReport r = invariant_report(M, N, opt.bound);
          out.payload_json = json_invariants(r).dump();
          out.payload_text = text_invariants(r);
          break;
        }
        case Stmt::Kind::ext:
        case Stmt::Kind::tor: {
          bool is_ext = st.kind == Stmt::Kind::ext;
          out.kind = is_ext ? "ext" : "tor";
          ModulePtr M = script.modules.at(st.name);
          ModulePtr N = script.modules.at(st.arg2);
          DerivedResult r = is_ext ? ext_module(st.iarg, M, N, opt.bound)
                                   : tor_module(st.iarg, M, N, opt.bound);
          ojson j;
          j["functor"] = r.functor;
          j["index"] = r.index;
          j["vanishes"] = r.vanishes;
          j["value"] = json_module_summary(r.value);
          out.payload_json = j.dump();
          std::ostringstream os;
          os << r.functor << "^" << r.index << (r.vanishes ? " = 0" : " != 0") << ", "
             << r.value->minimal()->ngens() << " generator(s)\n";
          out.payload_text = os.str();
          break;
        }
        case Stmt::Kind::grade: {
          out.kind = "grade";
          ModulePtr M = script.modules.at(st.name);
          ModulePtr N = script.modules.at(st.arg2);
          int g = grade_mn(M, N, opt.bound);
          ojson j;
          j["grade"] = g;
          out.payload_json = j.dump();
          out.payload_text = "grade = " + std::to_string(g) + "\n";
          break;
        }
        case Stmt::Kind::serre: {
          out.kind = "serre";
          ModulePtr M = script.modules.at(st.name);
          bool ok = satisfies_serre(M, st.iarg);
          ojson j;
          j["k"] = st.iarg;
          j["satisfies"] = ok;
          out.payload_json = j.dump();
          out.payload_text =
              "S_" + std::to_string(st.iarg) + " " + (ok ? "holds" : "fails") + "\n";
          break;
        }
        case Stmt::Kind::gdim: {
          out.kind = "gdim";
          ModulePtr M = script.modules.at(st.name);
          CertifiedValue g = gdim(M, opt.bound);
          out.payload_json = json_cert(g).dump();
          out.payload_text = "gdim " + g.str() + "\n";
          break;
        }
        case Stmt::Kind::canonical: {
          out.kind = "canonical";
          QRingPtr R = script.rings.at(st.name);
          ModulePtr K = canonical_module(R);
          ojson j = json_module_summary(K);
          j["maximal_cm"] = true;  // asserted by the construction
          out.payload_json = j.dump();
          out.payload_text =
              "canonical module with " + std::to_string(K->minimal()->ngens()) + " generator(s)\n";
          break;
        }
        case Stmt::Kind::check: {
          out.kind = "check";
          ModulePtr M = script.modules.at(st.name);
          ModulePtr N = st.arg2.empty() ? nullptr : script.modules.at(st.arg2);
          CheckOptions copt;
          copt.bound = opt.bound;
          copt.n = st.nparam;
          Verdict v = check_statement(*stmt_from_name(st.stmt_ids[0]), M, N, copt);
          out.inconsistent = !v.consistent;
          out.payload_json = json_verdict(v).dump();
          out.payload_text = text_verdict(v);
          break;
        }
        case Stmt::Kind::campaign: {
          out.kind = "campaign";
          CampaignOptions copt;
          copt.gen.seed = opt.seed ? *opt.seed : st.seed;
          copt.gen.vars = st.cvars;
          copt.gen.style = IdealStyle::monomial;
          copt.gen.max_degree = std::min(3, 1 + st.cvars);
          copt.count = st.count;
          copt.bound = opt.bound;
          copt.parallel = opt.parallel;
          std::vector<StmtId> ids;
          for (const auto& s : st.stmt_ids) ids.push_back(*stmt_from_name(s));
          CampaignSummary sum = run_campaign(ids, copt);
          out.inconsistent = !sum.failures.empty();
          out.payload_json = json_campaign(sum, opt.timings).dump();
          std::ostringstream os;
          os << "checks " << sum.checks << ", applicable " << sum.applicable << ", consistent "
             << sum.consistent << ", inapplicable " << sum.inapplicable << ", failures "
             << sum.failures.size() << "\n";
          for (const auto& f : sum.failures) os << indent_block(f.serialized);
          out.payload_text = os.str();
          break;
        }
        default: break;
      }
    } catch (const Error& e) {
      out.ok = false;
      out.error = e.what();
      out.error_kind = static_cast<int>(e.kind());
    }
    out.ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.commands.push_back(std::move(out));
    if (opt.fail_fast && (!rep.commands.back().ok || rep.commands.back().inconsistent)) break;
  }
  return rep;
}

int report_exit_code(const Report& r) {
  bool err = false;
  for (const auto& c : r.commands) {
    if (c.inconsistent) return kExitInconsistent;
    if (!c.ok) err = true;
  }
  return err ? kExitKernel : kExitOk;
}

std::string report_to_json(const Report& r, const ExecOptions& opt) {
  ojson j;
  j["schema"] = kJsonSchema;
  j["tool"] = r.tool_version;
  j["input_fingerprint"] = r.input_fingerprint;
  ojson cmds = ojson::array();
  for (const auto& c : r.commands) {
    ojson cj;
    cj["index"] = c.index;
    cj["kind"] = c.kind;
    cj["target"] = c.target;
    cj["ok"] = c.ok;
    if (!c.ok) {
      cj["error"] = c.error;
      cj["error_kind"] = c.error_kind;
    } else {
      cj["result"] = ojson::parse(c.payload_json.empty() ? "{}" : c.payload_json);
    }
    if (c.inconsistent) cj["inconsistent"] = true;
    if (opt.timings) cj["ms"] = c.ms;
    cmds.push_back(cj);
  }
  j["commands"] = cmds;
  j["exit_code"] = report_exit_code(r);
  return j.dump(2) + "\n";
}

std::string report_to_text(const Report& r, const ExecOptions& opt) {
  std::ostringstream os;
  os << r.tool_version << "  input " << r.input_fingerprint << "\n";
  for (const auto& c : r.commands) {
    os << "-- [" << c.index << "] " << c.kind << " " << c.target;
    if (opt.timings) os << "  (" << std::fixed << std::setprecision(1) << c.ms << " ms)";
    os << "\n";
    if (!c.ok)
      os << "    error: " << c.error << "\n";
    else
      os << indent_block(c.payload_text);
  }
  os << "exit " << report_exit_code(r) << "\n";
  return os.str();
}

}  // namespace cmw
