#include "catch_amalgamated.hpp"

#include "autstruct/alphabet.hh"
#include "autstruct/error.hh"

using namespace autstruct;

TEST_CASE("tokens are split on whitespace and joined with spaces") {
    CHECK(split_tokens("  a\tbb \n c ") == std::vector<std::string>{"a", "bb", "c"});
    CHECK(split_tokens("").empty());
    std::vector<std::string> tokens{"x", "y"};
    CHECK(join_tokens(tokens) == "x y");
}

TEST_CASE("token validity rejects whitespace, comment markers and the empty string") {
    CHECK(is_valid_token("+1"));
    CHECK(is_valid_token("#"));
    CHECK(is_valid_token("a@s"));
    CHECK_FALSE(is_valid_token(""));
    CHECK_FALSE(is_valid_token("a b"));
    CHECK_FALSE(is_valid_token("50%"));
}

TEST_CASE("alphabet keeps insertion ids and a separate token order") {
    Alphabet sigma({"1", "0", "#"});
    CHECK(sigma.size() == 3);
    CHECK(sigma.at("1") == 0);
    CHECK(sigma.token(2) == "#");
    // "#" < "0" < "1"
    CHECK(sigma.lex_order() == std::vector<LetterId>{2, 1, 0});
    CHECK(sigma.insert("0") == 1);
    CHECK(sigma.insert("$") == 3);
    CHECK(sigma.lex_order().front() == 2);
    CHECK(sigma.lex_order()[1] == 3);
}

TEST_CASE("duplicate or invalid tokens are rejected") {
    CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
    try {
        Alphabet({"a", "b c"});
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::InvalidToken);
    }
}

TEST_CASE("words parse from tokens and print back") {
    Alphabet sigma({"a", "b", "_bot"});
    Word w = sigma.parse_word("a _bot b");
    CHECK(w == Word{0, 2, 1});
    CHECK(sigma.format(w) == "a _bot b");
    CHECK(sigma.tokens_of(w) == std::vector<std::string>{"a", "_bot", "b"});
    CHECK(sigma.parse_word("").empty());
    try {
        sigma.parse_word("a c");
        FAIL("no throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownLetter);
    }
}

TEST_CASE("translate maps letters by token") {
    Alphabet from({"a", "b"});
    Alphabet to({"b", "c", "a"});
    CHECK(from.translate(Word{0, 1, 0}, to) == Word{2, 0, 2});
    CHECK_THROWS_AS(to.translate(Word{1}, from), Error);
}

TEST_CASE("error messages carry the kind") {
    Error e(ErrorKind::ConfigBudgetExceeded, "too many");
    CHECK(std::string(e.what()) == "ConfigBudgetExceeded: too many");
    CHECK(to_string(ErrorKind::NotGAutomaton) == "NotGAutomaton");
}
