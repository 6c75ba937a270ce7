// One line per acceptance criterion. Each criterion runs in a forked child so
// memoized operator images from one criterion never speed up another.
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "vertexloc/suite.hpp"

using namespace vertexloc;

namespace {

struct Criterion {
  int id;
  const char* what;
  double limit_s;
  std::function<std::string()> run;  // empty string on success, else a reason
};

std::string failures(const SuiteResult& r) {
  if (r.pass) return "";
  return r.report["suite"].get<std::string>() + ": " + std::to_string(r.report["summary"]["failed"].get<long>()) +
         " of " + std::to_string(r.report["summary"]["cases"].get<std::size_t>()) + " cases failed";
}

SuiteConfig cfg(const std::string& name) {
  SuiteConfig c;
  c.suite = name;
  return c;
}

std::string run(const SuiteConfig& c) { return failures(run_suite(c)); }

std::string both(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "; " + b;
}

std::vector<Criterion> criteria() {
  return {
      {1, "hook norms from the stabilized cutoff diagonal", 60,
       [] {
         SuiteConfig c = cfg("cutoff-converge");
         c.a = std::vector<int>{0};
         c.f = std::vector<std::string>{"1"};
         c.degree = 6;
         c.charges = std::make_pair(-2, 2);
         c.N_max = 20;
         return run(c);
       }},
      {2, "normalized flag pairing equals W", 300, [] { return run(cfg("cutoff-converge")); }},
      {3, "Clifford relations", 60, [] { return run(cfg("clifford")); }},
      {4, "Heisenberg relations", 60, [] { return run(cfg("heisenberg")); }},
      {5, "bosonization", 300, [] { return run(cfg("bosonization")); }},
      {6, "Virasoro intertwining and translation", 300, [] { return run(cfg("virasoro")); }},
      {7, "locality", 300, [] { return run(cfg("locality")); }},
      {8, "F/H recursion and the closed form for B", 120,
       [] { return both(run(cfg("lemma-FH")), run(cfg("fermicom"))); }},
      {9, "Euler characteristic identities", 10,
       [] {
         SuiteConfig c = cfg("euler-char");
         c.seed = 2026;
         return run(c);
       }},
      {10, "normalization asymptotics", 10, [] { return run(cfg("asymptotics")); }},
      {11, "E-class character against the series", 60, [] { return run(cfg("hilbert-echar")); }},
      {12, "Hilbert side correspondence", 120, [] { return run(cfg("hilbert-correspond")); }},
      {13, "oracle agreement at t = i", 60, [] { return run(cfg("oracle")); }},
      {14, "byte-identical reports", 60,
       [] {
         for (const char* name : {"euler-char", "lemma-FH", "heisenberg"}) {
           SuiteConfig c = cfg(name);
           c.seed = 7;
           if (std::string(name) == "heisenberg") {
             c.degree = 5;
             c.modes = 3;
           }
           if (run_suite(c).text() != run_suite(c).text()) return std::string(name) + " reports differ";
         }
         return std::string();
       }},
  };
}

// runs in a child; returns the reason text (empty on success) and elapsed seconds
std::pair<std::string, double> isolated(const Criterion& c) {
  int fd[2];
  if (pipe(fd) != 0) return {"pipe failed", 0};
  pid_t pid = fork();
  if (pid == 0) {
    close(fd[0]);
    std::string reason;
    try {
      reason = c.run();
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    std::string msg = (reason.empty() ? "ok" : "fail ") + reason;
    ssize_t w = write(fd[1], msg.data(), msg.size());
    (void)w;
    close(fd[1]);
    _exit(0);
  }
  close(fd[1]);
  auto start = std::chrono::steady_clock::now();
  std::string msg;
  char buf[4096];
  ssize_t n;
  while ((n = read(fd[0], buf, sizeof buf)) > 0) msg.append(buf, static_cast<std::size_t>(n));
  close(fd[0]);
  int status = 0;
  waitpid(pid, &status, 0);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (msg == "ok") return {"", secs};
  if (msg.rfind("fail ", 0) == 0) return {msg.substr(5), secs};
  return {"child died", secs};
}

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : criteria()) {
    auto [reason, secs] = isolated(c);
    bool in_time = secs < c.limit_s;
    bool pass = reason.empty() && in_time;
    if (!pass) ++failed;
    std::printf("criterion %d: %s  %s  (%.2f s, limit %.0f s)%s%s\n", c.id, pass ? "PASS" : "FAIL", c.what, secs,
                c.limit_s, reason.empty() ? "" : "  ", reason.c_str());
    if (reason.empty() && !in_time) std::printf("  over the time limit\n");
    std::fflush(stdout);
  }
  std::printf("%d of 14 criteria failed\n", failed);
  return failed ? 1 : 0;
}
