#pragma once

#include <stdexcept>
#include <string>

namespace smtfuzz {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error
{
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/** Lexical or syntactic failure, with a 1-based source position. */
class ParseError : public Error
{
 public:
  ParseError(const std::string& msg, int line, int col, std::string token)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)
              + (token.empty() ? "" : " near '" + token + "'")),
        d_line(line),
        d_col(col),
        d_token(std::move(token))
  {
  }

  int line() const { return d_line; }
  int col() const { return d_col; }
  const std::string& token() const { return d_token; }

 private:
  int d_line;
  int d_col;
  std::string d_token;
};

}  // namespace smtfuzz
