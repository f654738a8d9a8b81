#include <gtest/gtest.h>

#include <sstream>

#include "citeimpact/csv.hpp"

using namespace citeimpact;

TEST(Csv, QuotedFieldsAndEscapes) {
  std::istringstream in("a,\"b,c\",\"say \"\"hi\"\"\"\r\nx,\"multi\nline\",z\n");
  const auto recs = csv::read_all(in);
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(recs[0].fields, (std::vector<std::string>{"a", "b,c", "say \"hi\""}));
  EXPECT_EQ(recs[1].fields, (std::vector<std::string>{"x", "multi\nline", "z"}));
  EXPECT_EQ(recs[1].line, 2u);
}

TEST(Csv, UnterminatedQuoteThrows) {
  std::istringstream in("a,\"open\n");
  EXPECT_THROW(csv::read_all(in), std::runtime_error);
}

TEST(Csv, EscapeRoundTrips) {
  const std::vector<std::string> fields{"plain", "with,comma", "with \"quote\"", "", "line\nbreak"};
  std::istringstream in(csv::join(fields) + "\n");
  const auto recs = csv::read_all(in);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].fields, fields);
}
