// Copyright 2026 The Infostat Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infostat/eval.h"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "infostat/corpus.h"
#include "infostat/errors.h"
#include "infostat/rng.h"

namespace infostat {
namespace {

using nlohmann::json;

std::string Describe(const Mention& m) {
  return m.doc_id + ":" + std::to_string(m.sent_index) + ":" + std::to_string(m.start) +
         "-" + std::to_string(m.end);
}

std::map<SpanKey, const Mention*> IndexSpans(std::span<const Mention> mentions,
                                             const char* side) {
  std::map<SpanKey, const Mention*> index;
  for (const Mention& m : mentions) {
    if (!index.emplace(m.key(), &m).second) {
      throw DataError(std::string("duplicate ") + side + " span " + Describe(m));
    }
  }
  return index;
}

ISCategory RequireLabel(const Mention& m, const char* side) {
  if (!m.is_category) {
    throw DataError(std::string(side) + " mention " + Describe(m) + " has no label");
  }
  return *m.is_category;
}

// Per-class and confusion counts for labeled mentions.
struct ClassCounts {
  std::array<long long, kNumCategories> gold{};
  std::array<long long, kNumCategories> pred{};
  std::array<long long, kNumCategories> correct{};
  ConfusionMatrix confusion{};
  long long matched = 0;
};

ClassCounts CountClasses(std::span<const Mention> gold, std::span<const Mention> pred) {
  const auto gold_index = IndexSpans(gold, "gold");
  IndexSpans(pred, "predicted");
  ClassCounts c;
  for (const Mention& g : gold) ++c.gold[ClassIndex(RequireLabel(g, "gold"))];
  for (const Mention& p : pred) {
    const int pc = ClassIndex(RequireLabel(p, "predicted"));
    ++c.pred[pc];
    auto it = gold_index.find(p.key());
    if (it == gold_index.end()) continue;
    const int gc = ClassIndex(*it->second->is_category);
    ++c.matched;
    ++c.confusion[gc][pc];
    if (gc == pc) ++c.correct[pc];
  }
  return c;
}

std::map<ISCategory, PRF> PerClass(const ClassCounts& c) {
  std::map<ISCategory, PRF> out;
  for (ISCategory cat : kAllCategories) {
    const int i = ClassIndex(cat);
    out[cat] = PRF::FromCounts(c.gold[i], c.pred[i], c.correct[i]);
  }
  return out;
}

long long Sum(const std::array<long long, kNumCategories>& a) {
  long long s = 0;
  for (long long v : a) s += v;
  return s;
}

std::vector<long long> MatchCounts(std::span<const Mention> gold,
                                   std::span<const Mention> pred, bool labels) {
  if (!labels) {
    const PRF prf = EvalMentions(gold, pred);
    return {prf.gold_count, prf.pred_count, prf.correct_count};
  }
  const ClassCounts c = CountClasses(gold, pred);
  return {Sum(c.gold), Sum(c.pred), Sum(c.correct)};
}

double FromMatchCounts(const std::vector<long long>& v) {
  return PRF::FromCounts(v[0], v[1], v[2]).f1;
}

std::vector<std::string> DocIds(const DocMentions& docs) {
  std::vector<std::string> ids;
  for (const auto& [id, _] : docs) ids.push_back(id);
  return ids;
}

// Count vectors per document for both systems, in doc_id order.
struct PairedCounts {
  std::vector<std::vector<long long>> a;
  std::vector<std::vector<long long>> b;
};

PairedCounts CollectCounts(const DocMentions& gold, const DocMentions& pred_a,
                           const DocMentions& pred_b, const Scorer& scorer) {
  if (DocIds(gold) != DocIds(pred_a) || DocIds(gold) != DocIds(pred_b)) {
    throw DataError("randomization test inputs cover different document sets");
  }
  PairedCounts out;
  for (const auto& [id, g] : gold) {
    out.a.push_back(scorer.counts(g, pred_a.at(id)));
    out.b.push_back(scorer.counts(g, pred_b.at(id)));
  }
  return out;
}

void Accumulate(std::vector<long long>& total, const std::vector<long long>& add) {
  if (total.empty()) total.assign(add.size(), 0);
  for (size_t i = 0; i < add.size(); ++i) total[i] += add[i];
}

double AbsDifference(const PairedCounts& counts, const std::vector<bool>& swapped,
                     const Scorer& scorer) {
  std::vector<long long> ta, tb;
  for (size_t d = 0; d < counts.a.size(); ++d) {
    Accumulate(ta, swapped[d] ? counts.b[d] : counts.a[d]);
    Accumulate(tb, swapped[d] ? counts.a[d] : counts.b[d]);
  }
  if (ta.empty()) return 0.0;
  return std::fabs(scorer.value(ta) - scorer.value(tb));
}

// Differences within this margin of the observed one count as reaching it.
constexpr double kTieMargin = 1e-12;

std::string Pct(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%6.1f", 100.0 * v);
  return buf;
}

void PrfRow(std::ostringstream& out, const std::string& label, const PRF& prf) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-18s %s %s %s %8lld %8lld %8lld\n", label.c_str(),
                Pct(prf.recall).c_str(), Pct(prf.precision).c_str(),
                Pct(prf.f1).c_str(), prf.gold_count, prf.pred_count,
                prf.correct_count);
  out << buf;
}

}  // namespace

PRF PRF::FromCounts(long long gold, long long pred, long long correct) {
  PRF p;
  p.gold_count = gold;
  p.pred_count = pred;
  p.correct_count = correct;
  p.recall = gold > 0 ? static_cast<double>(correct) / gold : 0.0;
  p.precision = pred > 0 ? static_cast<double>(correct) / pred : 0.0;
  p.f1 = F1(p.precision, p.recall);
  return p;
}

double F1(double precision, double recall) {
  const double s = precision + recall;
  return s > 0.0 ? 2.0 * precision * recall / s : 0.0;
}

PRF EvalMentions(std::span<const Mention> gold, std::span<const Mention> pred) {
  const auto gold_index = IndexSpans(gold, "gold");
  IndexSpans(pred, "predicted");
  long long correct = 0;
  for (const Mention& p : pred) correct += gold_index.count(p.key());
  return PRF::FromCounts(static_cast<long long>(gold.size()),
                         static_cast<long long>(pred.size()), correct);
}

MetricReport EvalIsGold(std::span<const Mention> gold, std::span<const Mention> pred) {
  const auto gold_index = IndexSpans(gold, "gold");
  const auto pred_index = IndexSpans(pred, "predicted");
  for (const auto& [key, m] : gold_index) {
    if (!pred_index.count(key)) throw DataError("gold span " + Describe(*m) + " has no prediction");
  }
  for (const auto& [key, m] : pred_index) {
    if (!gold_index.count(key)) throw DataError("predicted span " + Describe(*m) + " is not a gold span");
  }
  const ClassCounts c = CountClasses(gold, pred);
  MetricReport report;
  report.per_class = PerClass(c);
  report.confusion = c.confusion;
  report.accuracy =
      gold.empty() ? 0.0 : static_cast<double>(Sum(c.correct)) / static_cast<double>(gold.size());
  return report;
}

MetricReport EvalIsE2e(std::span<const Mention> gold, std::span<const Mention> pred) {
  const ClassCounts c = CountClasses(gold, pred);
  MetricReport report;
  report.mention_prf = PRF::FromCounts(static_cast<long long>(gold.size()),
                                       static_cast<long long>(pred.size()), c.matched);
  report.per_class = PerClass(c);
  report.confusion = c.confusion;
  report.overall = PRF::FromCounts(Sum(c.gold), Sum(c.pred), Sum(c.correct));
  return report;
}

std::map<int, BucketResult> LengthBucketReport(std::span<const Mention> gold,
                                               std::span<const Mention> pred) {
  const auto gold_index = IndexSpans(gold, "gold");
  IndexSpans(pred, "predicted");
  std::array<long long, kLengthBuckets> g{}, p{}, c{};
  for (const Mention& m : gold) ++g[LengthBucket(m.length())];
  for (const Mention& m : pred) {
    const int b = LengthBucket(m.length());
    ++p[b];
    if (gold_index.count(m.key())) ++c[b];
  }
  std::map<int, BucketResult> out;
  for (int b = 0; b < kLengthBuckets; ++b) {
    out[b].prf = PRF::FromCounts(g[b], p[b], c[b]);
    out[b].frequency =
        gold.empty() ? 0.0 : static_cast<double>(g[b]) / static_cast<double>(gold.size());
  }
  return out;
}

DocMentions GroupByDocument(std::span<const Mention> mentions,
                            std::span<const std::string> doc_ids) {
  DocMentions out;
  for (const std::string& id : doc_ids) out[id];
  for (const Mention& m : mentions) {
    auto it = out.find(m.doc_id);
    if (it == out.end()) throw DataError("mention " + Describe(m) + " refers to an unknown document");
    it->second.push_back(m);
  }
  return out;
}

Scorer NamedScorer(const std::string& name) {
  if (name == "mention-f1" || name == "bridging-f1") {
    return {name, [](auto g, auto p) { return MatchCounts(g, p, false); },
            FromMatchCounts};
  }
  if (name == "is-e2e-f1") {
    return {name, [](auto g, auto p) { return MatchCounts(g, p, true); },
            FromMatchCounts};
  }
  if (name == "is-accuracy") {
    return {name,
            [](auto g, auto p) {
              const MetricReport r = EvalIsGold(g, p);
              long long correct = 0;
              for (const auto& [_, prf] : r.per_class) correct += prf.correct_count;
              return std::vector<long long>{static_cast<long long>(g.size()), correct};
            },
            [](const std::vector<long long>& v) {
              return v[0] > 0 ? static_cast<double>(v[1]) / static_cast<double>(v[0]) : 0.0;
            }};
  }
  throw ConfigError("unknown metric '" + name + "'");
}

std::vector<std::string> ScorerNames() {
  return {"mention-f1", "is-e2e-f1", "is-accuracy", "bridging-f1"};
}

double ScoreDocuments(const Scorer& scorer, const DocMentions& gold,
                      const DocMentions& pred) {
  std::vector<long long> total;
  for (const auto& [id, g] : gold) {
    auto it = pred.find(id);
    static const std::vector<Mention> kNone;
    Accumulate(total, scorer.counts(g, it == pred.end() ? kNone : it->second));
  }
  return total.empty() ? 0.0 : scorer.value(total);
}

double RandomizationTest(const DocMentions& gold, const DocMentions& pred_a,
                         const DocMentions& pred_b, const Scorer& scorer,
                         long long n_shuffles, uint64_t seed) {
  if (n_shuffles < 1) throw ConfigError("n_shuffles must be >= 1");
  const PairedCounts counts = CollectCounts(gold, pred_a, pred_b, scorer);
  const size_t d = counts.a.size();
  std::vector<bool> swapped(d, false);
  const double observed = AbsDifference(counts, swapped, scorer);
  Rng rng(seed);
  long long hits = 0;
  for (long long s = 0; s < n_shuffles; ++s) {
    for (size_t i = 0; i < d; ++i) swapped[i] = rng.Coin();
    if (AbsDifference(counts, swapped, scorer) >= observed - kTieMargin) ++hits;
  }
  return static_cast<double>(hits + 1) / static_cast<double>(n_shuffles + 1);
}

double ExactRandomizationTest(const DocMentions& gold, const DocMentions& pred_a,
                              const DocMentions& pred_b, const Scorer& scorer) {
  const PairedCounts counts = CollectCounts(gold, pred_a, pred_b, scorer);
  const size_t d = counts.a.size();
  if (d > 24) throw ConfigError("exact enumeration supports at most 24 documents");
  std::vector<bool> swapped(d, false);
  const double observed = AbsDifference(counts, swapped, scorer);
  const uint64_t total = uint64_t{1} << d;
  uint64_t hits = 0;
  for (uint64_t mask = 0; mask < total; ++mask) {
    for (size_t i = 0; i < d; ++i) swapped[i] = (mask >> i) & 1;
    if (AbsDifference(counts, swapped, scorer) >= observed - kTieMargin) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(total);
}

std::string FormatReport(const MetricReport& report, bool with_buckets,
                         bool with_confusion) {
  std::ostringstream out;
  const char* header = "                        R      P      F     gold     pred  correct\n";
  if (report.mention_prf) {
    out << "Mentions\n" << header;
    PrfRow(out, "mentions", *report.mention_prf);
    out << '\n';
  }
  if (!report.per_class.empty()) {
    out << "Information status\n" << header;
    for (const auto& [cat, prf] : report.per_class) {
      PrfRow(out, std::string(ShortName(cat)), prf);
    }
    if (report.overall) PrfRow(out, "overall", *report.overall);
    if (report.accuracy) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%-18s %s\n", "accuracy", Pct(*report.accuracy).c_str());
      out << buf;
    }
    out << '\n';
  }
  if (with_buckets && !report.length_buckets.empty()) {
    out << "Mention length\n"
        << "                        R      P      F   Freq     gold     pred  correct\n";
    for (const auto& [b, r] : report.length_buckets) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-18s %s %s %s %s %8lld %8lld %8lld\n",
                    LengthBucketName(b).c_str(), Pct(r.prf.recall).c_str(),
                    Pct(r.prf.precision).c_str(), Pct(r.prf.f1).c_str(),
                    Pct(r.frequency).c_str(), r.prf.gold_count, r.prf.pred_count,
                    r.prf.correct_count);
      out << buf;
    }
    out << '\n';
  }
  if (with_confusion && !report.per_class.empty()) {
    out << "Confusion (rows gold, columns predicted)\n" << std::string(19, ' ');
    for (ISCategory c : kAllCategories) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%10.9s", std::string(ShortName(c)).c_str());
      out << buf;
    }
    out << '\n';
    for (ISCategory g : kAllCategories) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%-18s ", std::string(ShortName(g)).c_str());
      out << buf;
      for (ISCategory p : kAllCategories) {
        std::snprintf(buf, sizeof buf, "%10lld", report.confusion[ClassIndex(g)][ClassIndex(p)]);
        out << buf;
      }
      out << '\n';
    }
  }
  return out.str();
}

json ToJson(const PRF& prf) {
  return {{"recall", prf.recall},         {"precision", prf.precision},
          {"f1", prf.f1},                 {"gold", prf.gold_count},
          {"pred", prf.pred_count},       {"correct", prf.correct_count}};
}

json ToJson(const MetricReport& report) {
  json j = json::object();
  if (report.mention_prf) j["mentions"] = ToJson(*report.mention_prf);
  if (!report.per_class.empty()) {
    json per_class = json::object();
    for (const auto& [cat, prf] : report.per_class) {
      per_class[std::string(ToString(cat))] = ToJson(prf);
    }
    j["per_class"] = per_class;
    json confusion = json::object();
    for (ISCategory g : kAllCategories) {
      json row = json::object();
      for (ISCategory p : kAllCategories) {
        row[std::string(ToString(p))] = report.confusion[ClassIndex(g)][ClassIndex(p)];
      }
      confusion[std::string(ToString(g))] = row;
    }
    j["confusion"] = confusion;
  }
  if (report.accuracy) j["accuracy"] = *report.accuracy;
  if (report.overall) j["overall"] = ToJson(*report.overall);
  if (!report.length_buckets.empty()) {
    json buckets = json::array();
    for (const auto& [b, r] : report.length_buckets) {
      json row = ToJson(r.prf);
      row["bucket"] = LengthBucketName(b);
      row["freq"] = r.frequency;
      buckets.push_back(row);
    }
    j["length_buckets"] = buckets;
  }
  return j;
}

}  // namespace infostat
