#pragma once

#include <map>
#include <string>
#include <vector>

namespace fincat {

enum class Verdict { Yes, No, DepthDivergent, NotChecked };
std::string verdict_name(Verdict v);

// A count series tracked over truncation depths for one probe object.
// A strictly increasing series is how a finite truncation reports that
// the untruncated category fails a finiteness or chain condition.
struct CellSeries {
  std::string probe;
  std::vector<int> depths;
  std::vector<long long> counts;
  bool strictly_increasing() const;
};

struct Table1Row {
  std::string category;
  int depth = 0;
  Verdict main = Verdict::NotChecked;
  Verdict weak = Verdict::NotChecked;
  Verdict pultr = Verdict::NotChecked;
  Verdict variant = Verdict::NotChecked;
  Verdict dawar = Verdict::NotChecked;
  Verdict reggio = Verdict::NotChecked;
  std::map<std::string, CellSeries> series;  // keyed by column name
};

struct Table1Options {
  int depth = 4;
  std::vector<int> series_depths = {2, 3, 4, 5, 6};
  int groups_max_order = 6;
  int digraph_max_size = 3;
};

// Rows in the order digraphs, finite groups, Definition 4.1, Z, N, -N;
// verdicts derive from checker reports, never hand-entered.
std::vector<Table1Row> table1_report(const Table1Options& opt = {});

std::string render_table1_text(const std::vector<Table1Row>& rows);
std::string render_table1_csv(const std::vector<Table1Row>& rows);

}  // namespace fincat
