#include "core/emit.hpp"

#include <json.hpp>

#include <algorithm>

namespace wordeco {

std::optional<Format> parse_format(std::string_view name)
{
  if(name == "table")
    return Format::Text;
  if(name == "csv")
    return Format::Csv;
  if(name == "json")
    return Format::Json;
  return std::nullopt;
}

namespace {

std::string csv_field(const std::string& s)
{
  if(s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for(char c : s)
    {
      if(c == '"')
        out += '"';
      out += c;
    }
  return out + "\"";
}

void csv_line(std::string& out, const std::vector<std::string>& cells)
{
  for(std::size_t i = 0; i < cells.size(); ++i)
    {
      if(i > 0)
        out += ',';
      out += csv_field(cells[i]);
    }
  out += '\n';
}

std::string render_text(const Table& t)
{
  std::vector<std::size_t> width(t.columns.size(), 0);
  for(std::size_t c = 0; c < t.columns.size(); ++c)
    width[c] = t.columns[c].size();
  for(const auto& row : t.rows)
    for(std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for(std::size_t c = 0; c < cells.size(); ++c)
      {
        if(c > 0)
          text += "  ";
        text += std::string(width[c] - std::min(width[c], cells[c].size()), ' ') + cells[c];
      }
    while(!text.empty() && text.back() == ' ')
      text.pop_back();
    out += text + '\n';
  };
  if(!t.columns.empty())
    line(t.columns);
  for(const auto& row : t.rows)
    line(row);
  for(const auto& note : t.notes)
    out += "note: " + note + '\n';
  return out;
}

} // namespace

std::string render(const Table& table, Format format)
{
  switch(format)
    {
    case Format::Text: return render_text(table);
    case Format::Csv:
      {
        std::string out;
        csv_line(out, table.columns);
        for(const auto& row : table.rows)
          csv_line(out, row);
        return out;
      }
    case Format::Json:
      {
        nlohmann::ordered_json j;
        j["columns"] = table.columns;
        j["rows"] = table.rows;
        j["notes"] = table.notes;
        return j.dump(2) + '\n';
      }
    }
  return {};
}

Table alpha_to_table(const AlphaMatrix& alpha)
{
  Table t;
  t.columns.push_back("n");
  for(std::size_t k = 0; k <= alpha.n_max(); ++k)
    t.columns.push_back(std::to_string(k));
  for(std::size_t n = 0; n <= alpha.n_max(); ++n)
    {
      std::vector<std::string> row{std::to_string(n)};
      for(std::size_t k = 0; k <= alpha.n_max(); ++k)
        row.push_back(to_decimal(alpha.at(n, k)));
      t.rows.push_back(std::move(row));
    }
  return t;
}

Table eco_to_table(const EcoMatrix& matrix)
{
  Table t;
  t.columns.push_back("level");
  for(const auto& l : matrix.columns)
    t.columns.push_back(label_name(l));
  for(std::size_t i = 0; i < matrix.rows.size(); ++i)
    {
      std::vector<std::string> row{std::to_string(i + 1)};
      for(const auto& v : matrix.rows[i])
        row.push_back(to_decimal(v));
      t.rows.push_back(std::move(row));
    }
  return t;
}

Table series_to_table(const TruncatedSeries& series)
{
  Table t;
  t.columns = {"n", "coefficient"};
  for(std::size_t n = 0; n <= series.order(); ++n)
    t.rows.push_back({std::to_string(n), to_decimal(series.coeff(n))});
  return t;
}

} // namespace wordeco
