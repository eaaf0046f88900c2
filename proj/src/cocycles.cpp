#include <hexinv/cocycles.hpp>

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>

namespace hexinv {
namespace {

struct RawEntry {
  int p;
  int kappa;
  const char* text;
};

// Basis representatives per (characteristic, degree), in catalogue order.
const RawEntry kEntries[] = {
    {2, 2,
     "de+ce+ae+cd+bd+c^2+bc+ac+ab"},
    {2, 3,
     "bde+bce+ace+acd+abd"},
    {2, 3,
     "de^2+ce^2+ae^2+c^2d+b^2d+c^3+ac^2+b^2c+ab^2"},
    {2, 4,
     "ce^3+be^3+bde^2+ace^2+b^2e^2+c^3e+b^2ce+ac^2d+ab^2d"},
    {2, 4,
     "bce^2+b^2e^2+b^2de+ac^2e+b^3e+bd^3+ad^3+abd^2+a^2d^2+a^2cd+b^3d"},
    {2, 4,
     "d^2e^2+c^2e^2+a^2e^2+c^2d^2+b^2d^2+c^4+b^2c^2+a^2c^2+a^2b^2"},
    {2, 5,
     "de^4+ce^4+ae^4+c^4d+b^4d+c^5+ac^4+b^4c+ab^4"},
    {2, 5,
     "ce^4+be^4+c^2e^3+b^2e^3+b^2de^2+c^3e^2+ac^2e^2+b^2ce^2+b^3e^2+c^4e+b^4e"
     "+bd^4+ad^4+b^2d^3+a^2d^3+b^3d^2+ab^2d^2+a^2c^2d+b^4d"},
    {2, 5,
     "bd^2e^2+b^2de^2+bc^2e^2+ac^2e^2+b^2ce^2+a^2ce^2+b^2d^2e+b^2c^2e+a^2c^2e"
     "+ac^2d^2+a^2cd^2+ab^2d^2+a^2bd^2+a^2c^2d+a^2b^2d"},
    {2, 6,
     "ce^5+be^5+bde^4+c^2e^4+ace^4+c^4e^2+b^4e^2+c^5e+b^4ce+ac^4d+ab^4d"},
    {2, 6,
     "b^2d^2e^2+b^2c^2e^2+a^2c^2e^2+a^2c^2d^2+a^2b^2d^2"},
    {2, 6,
     "d^2e^4+c^2e^4+a^2e^4+c^4d^2+b^4d^2+c^6+a^2c^4+b^4c^2+a^2b^4"},
    {2, 6,
     "bce^4+b^2e^4+b^4de+ac^4e+b^5e+bd^5+ad^5+b^2d^4+abd^4+b^4d^2"
     "+a^4d^2+a^4cd+b^5d"},
    {3, 2,
     "e^2+2d^2+2bd+ad+c^2+bc+2ac"},
    {3, 4,
     "e^4+de^3+ce^3+be^3+ae^3+2c^3e+b^3e+2c^3d"
     "+b^3d+2c^4+2bc^3+2ac^3+b^3c+b^4+ab^3"},
    {3, 4,
     "de^3+ce^3+2be^3+2ae^3+d^2e^2+bce^2+2b^2e^2+2a^2e^2+bd^2e+c^2de"
     "+bcde+acde+2abde+bc^2e+b^2ce+2abce+b^3e+2ab^2e+2a^2be+2c^2d^2"
     "+2bcd^2+2acd^2+2b^2d^2+abd^2+c^3d+2bc^2d+2b^2cd+2abcd+2a^2cd+b^3d"
     "+ab^2d+a^2bd+2c^4+2bc^3+ac^3+2a^2c^2+b^3c+ab^2c+a^2bc+b^4+ab^3"},
    {3, 5,
     "de^4+2ae^4+d^2e^3+2bde^3+c^2e^3+2b^2e^3+abe^3+2a^2e^3"
     "+c^3de+2b^3de+c^4e+2bc^3e+2b^3ce+b^4e+2c^3d^2+b^3d^2"
     "+c^4d+bc^3d+2ac^3d+2b^3cd+2b^4d+ab^3d+c^5+bc^4"
     "+2ac^4+abc^3+a^2c^3+2b^3c^2+2b^4c+ab^3c+2ab^4+2a^2b^3"},
    {3, 6,
     "e^6+2d^6+2b^3d^3+a^3d^3+c^6+b^3c^3+2a^3c^3"},
    {3, 6,
     "c^2e^4+bce^4+b^2e^4+cd^2e^3+2bd^2e^3+2ad^2e^3+2c^2de^3+2bcde^3+2acde^3"
     "+b^2de^3+abde^3+a^2de^3+bc^2e^3+2ac^2e^3+2b^2ce^3+abce^3+a^2ce^3+ab^2e^3"
     "+2a^2be^3+d^4e^2+c^4e^2+bc^3e^2+b^3ce^2+2a^4e^2+2d^5e+bd^4e+2c^2d^3e"
     "+2bcd^3e+2acd^3e+b^2d^3e+abd^3e+a^2d^3e+c^3d^2e+2b^3d^2e+2a^3d^2e+c^4de"
     "+2bc^3de+2ac^3de+2b^3cde+2a^3cde+ab^3de+a^3bde+c^5e+bc^4e+2b^2c^3e"
     "+abc^3e+a^2c^3e+b^3c^2e+2a^3c^2e+b^4ce+ab^3ce+a^3bce+2b^5e+2ab^4e"
     "+2a^2b^3e+a^3b^2e+2a^4be+d^6+cd^5+2ad^5+2c^2d^4+2bcd^4+2acd^4+b^2d^4"
     "+abd^4+a^2d^4+c^3d^3+bc^2d^3+b^2cd^3+abcd^3+2a^2cd^3+b^3d^3+2ab^2d^3+c^4d^2"
     "+bc^3d^2+2ac^3d^2+b^3cd^2+2a^3cd^2+2b^4d^2+2ab^3d^2+2a^3bd^2+2a^4d^2+2bc^4d"
     "+b^2c^3d+abc^3d+2a^2c^3d+b^3c^2d+2b^4cd+ab^3cd+a^3bcd+2a^4cd+b^5d"
     "+ab^4d+2a^3b^2d+a^4bd+c^6+2bc^5+2ac^5+2ab^2c^3+a^3c^3+b^4c^2+ab^3c^2"
     "+a^3bc^2+ab^4c+2a^3b^2c+a^4bc+a^2b^4+a^3b^3"},
    {5, 2,
     "e^2+ce+4be+d^2+3bd+2ad+c^2+3bc+3ac+2b^2"},
    {5, 6,
     "e^6+2de^5+2ce^5+be^5+2ae^5+4c^5e+b^5e+3c^5d+2b^5d+3c^6+4bc^5"
     "+3ac^5+2b^5c+b^6+2ab^5"},
    {5, 6,
     "de^5+3ce^5+2be^5+4ae^5+c^2e^4+3bce^4+b^2e^4+2cd^2e^3+3bd^2e^3+ad^2e^3"
     "+3c^2de^3+4bcde^3+3acde^3+4b^2de^3+2abde^3+4a^2de^3+3c^3e^3+2bc^2e^3"
     "+ac^2e^3+3b^2ce^3+abce^3+2a^2ce^3+2ab^2e^3+3a^2be^3+a^3e^3+2cd^3e^2+3bd^3e^2"
     "+ad^3e^2+c^2d^2e^2+bcd^2e^2+acd^2e^2+4b^2d^2e^2+3abd^2e^2+3c^3de^2+3bc^2de^2"
     "+2ac^2de^2+3abcde^2+3a^2cde^2+b^3de^2+3a^2bde^2+4c^4e^2+4ac^3e^2+4a^2c^2e^2"
     "+2b^3ce^2+ab^2ce^2+3a^2bce^2+3a^3ce^2+b^4e^2+4ab^3e^2+2a^2b^2e^2+a^3be^2"
     "+3a^4e^2+d^5e+3cd^4e+2bd^4e+4ad^4e+2bcd^3e+4b^2d^3e+abd^3e+3a^2d^3e"
     "+3c^3d^2e+2bc^2d^2e+2ac^2d^2e+b^2cd^2e+2abcd^2e+2b^3d^2e+3ab^2d^2e+4a^3d^2e"
     "+2c^4de+4ac^3de+4b^2c^2de+2a^2c^2de+4b^3cde+4ab^2cde+4a^2bcde+2a^3cde"
     "+3b^4de+2ab^3de+2a^2b^2de+3a^3bde+3a^4de+4c^5e+4bc^4e+2b^2c^3e"
     "+4abc^3e+2a^2c^3e+4b^3c^2e+4ab^3ce+a^3bce+3b^5e+4a^2b^3e+3a^4be+4d^6"
     "+4cd^5+4bd^5+2ad^5+2c^2d^4+2acd^4+4b^2d^4+2a^2d^4+3c^3d^3+bc^2d^3"
     "+2ac^2d^3+2b^2cd^3+abcd^3+2a^2cd^3+3b^3d^3+ab^2d^3+2a^2bd^3+3a^3d^3+4c^4d^2"
     "+3bc^3d^2+3ac^3d^2+b^2c^2d^2+2abc^2d^2+2b^3cd^2+ab^2cd^2+3a^3cd^2+b^4d^2"
     "+ab^3d^2+4a^3bd^2+c^5d+bc^4d+3b^2c^3d+2abc^3d+a^2c^3d+b^3c^2d+2ab^2c^2d"
     "+3a^2bc^2d+a^3c^2d+ab^3cd+3a^2b^2cd+4a^3bcd+2a^4cd+2b^5d+a^2b^3d"
     "+2a^4bd+2c^6+4ac^5+ab^2c^3+a^2bc^3+3a^3c^3+3ab^3c^2+3a^2b^2c^2+2a^3bc^2"
     "+2a^4c^2+3b^5c+2a^2b^3c+4a^4bc+4b^6+2ab^5"},
};

// (p, kappa) pairs tabulated as having no nontrivial classes.
const std::pair<int, int> kEmpty[] = {
    {2, 1}, {3, 1}, {3, 3}, {5, 1}, {5, 3}, {5, 4}, {5, 5}};

const char kChar0[] = "4e^2-6ce+6be-d^2+2bd-2ad+4c^2-8bc+2ac+3b^2";

bool tabulated(int p, int kappa) {
  for (const RawEntry& e : kEntries)
    if (e.p == p && e.kappa == kappa) return true;
  for (const auto& e : kEmpty)
    if (e.first == p && e.second == kappa) return true;
  return false;
}

// "p2k3c1" -> (2, 3, 1).
bool parse_name(const std::string& s, int& p, int& kappa, int& index) {
  std::size_t i = 0;
  auto number = [&](char tag, int& out) {
    if (i >= s.size() || s[i] != tag) return false;
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
    long v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      v = v * 10 + (s[i] - '0');
      if (v > 1000) return false;
      ++i;
    }
    out = static_cast<int>(v);
    return true;
  };
  return number('p', p) && number('k', kappa) && number('c', index) &&
         i == s.size();
}

}  // namespace

const std::vector<Cocycle>& catalogue(int p, int kappa) {
  if (!tabulated(p, kappa))
    throw std::out_of_range("no catalogue for p=" + std::to_string(p) +
                            ", kappa=" + std::to_string(kappa));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<Cocycle>>>
      cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, kappa}];
  if (!slot) {
    auto built = std::make_unique<std::vector<Cocycle>>();
    int index = 0;
    for (const RawEntry& e : kEntries) {
      if (e.p != p || e.kappa != kappa) continue;
      Cocycle c;
      c.name = "p" + std::to_string(p) + "k" + std::to_string(kappa) + "c" +
               std::to_string(++index);
      c.p = p;
      c.kappa = kappa;
      c.cochain = cochain_from_integers(p, kappa, parse_letters(e.text));
      built->push_back(std::move(c));
    }
    slot = std::move(built);
  }
  return *slot;
}

std::vector<std::pair<int, int>> catalogue_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int p : {2, 3, 5})
    for (int kappa = 1; kappa <= 6; ++kappa) out.emplace_back(p, kappa);
  return out;
}

Cochain catalogue_lookup(const std::string& name) {
  std::optional<Cochain> sum;
  std::size_t pos = 0;
  for (;;) {
    std::size_t next = name.find('+', pos);
    std::string part = name.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    int p = 0, kappa = 0, index = 0;
    if (!parse_name(part, p, kappa, index))
      throw std::invalid_argument("bad cocycle name '" + part + "'");
    const std::vector<Cocycle>* list = nullptr;
    try {
      list = &catalogue(p, kappa);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("unknown cocycle " + part);
    }
    if (index < 1 || static_cast<std::size_t>(index) > list->size())
      throw std::invalid_argument("unknown cocycle " + part);
    const Cochain& c = (*list)[index - 1].cochain;
    if (!sum) {
      sum = c;
    } else {
      if (sum->p != p || sum->kappa != kappa)
        throw std::invalid_argument(
            "cocycle sum mixes characteristics or degrees: " + name);
      sum = add(*sum, c);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return *sum;
}

std::string char0_text() { return kChar0; }

Cochain char0_reduction(int p) {
  return cochain_from_integers(p, 2, parse_letters(kChar0));
}

bool CheckReport::pass() const {
  for (const CheckLine& l : lines)
    if (!l.pass) return false;
  return true;
}

std::string CheckReport::to_text() const {
  std::string out;
  for (const CheckLine& l : lines)
    out += (l.pass ? "ok   " : "FAIL ") + l.label + "\n";
  return out;
}

CheckReport verify_catalogue() {
  CheckReport rep;
  auto line = [&](std::string label, bool ok) {
    rep.lines.push_back({std::move(label), ok});
  };
  for (auto [p, kappa] : catalogue_pairs()) {
    const auto& basis = catalogue(p, kappa);
    std::string tag = "p=" + std::to_string(p) + " kappa=" + std::to_string(kappa);
    bool entries_ok = true;
    std::vector<Cochain> cs;
    for (const Cocycle& c : basis) {
      entries_ok = entries_ok && is_cocycle(c.cochain) && !is_coboundary(c.cochain);
      cs.push_back(c.cochain);
    }
    line(tag + ": " + std::to_string(basis.size()) + " nontrivial cocycles",
         entries_ok);
    if (cs.size() > 1) line(tag + ": independent modulo coboundaries", classes_independent(cs));
    line(tag + ": basis size equals computed dimension",
         h4(p, kappa).dim == static_cast<long long>(basis.size()));
  }
  line("power map 2,2 -> 2,4", frobenius(catalogue(2, 2)[0].cochain) ==
                                   catalogue(2, 4)[2].cochain);
  line("power map 2,3 -> 2,6 (first)", frobenius(catalogue(2, 3)[0].cochain) ==
                                           catalogue(2, 6)[1].cochain);
  line("power map 2,3 -> 2,6 (second)", frobenius(catalogue(2, 3)[1].cochain) ==
                                            catalogue(2, 6)[2].cochain);
  line("power map 3,2 -> 3,6", frobenius(catalogue(3, 2)[0].cochain) ==
                                   catalogue(3, 6)[0].cochain);
  return rep;
}

CheckReport verify_char0_bridge() {
  CheckReport rep;
  auto line = [&](std::string label, bool ok) {
    rep.lines.push_back({std::move(label), ok});
  };
  for (int p : {101, 103}) {
    Cochain red = char0_reduction(p);
    line("mod " + std::to_string(p) + ": nontrivial cocycle",
         !red.zero() && is_cocycle(red));
  }
  line("mod 3 reproduces the degree-2 representative",
       char0_reduction(3) == catalogue(3, 2)[0].cochain);
  line("mod 5 reproduces the degree-2 representative up to sign",
       char0_reduction(5) ==
           scale(catalogue(5, 2)[0].cochain, reduced_ring(4, 5).field()->neg(1)));
  Cochain red2 = char0_reduction(2);
  line("mod 2 lands in the trivial class", is_cocycle(red2) && is_coboundary(red2));
  line("mod 2 misses the catalogued class",
       !cohomologous(red2, catalogue(2, 2)[0].cochain));
  return rep;
}

}  // namespace hexinv
