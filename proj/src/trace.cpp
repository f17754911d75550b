#include "trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "errors.hpp"

namespace cdkit {

namespace {

void put(std::ostream& out, double v) {
  if (std::isnan(v)) {
    out << "nan";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

}  // namespace

void write_trace_csv(const Trace& t, std::ostream& out) {
  out << "k,elapsed_s,f,gap,j1,j2,theta_or_a,gamma_num,gamma_den,energy\n";
  for (const TraceRecord& r : t.records) {
    out << r.k << ',';
    put(out, r.elapsed_s);
    out << ',';
    put(out, r.f);
    out << ',';
    put(out, r.gap);
    out << ',' << r.j1 << ',' << r.j2 << ',';
    put(out, r.theta_or_a);
    out << ',';
    put(out, r.gamma_num);
    out << ',';
    put(out, r.gamma_den);
    out << ',';
    put(out, r.energy);
    out << '\n';
  }
  if (!out) fail(Errc::io, "trace write failed");
}

void write_trace_csv_file(const Trace& t, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::io, "cannot open " + path + " for writing");
  write_trace_csv(t, out);
}

}  // namespace cdkit
