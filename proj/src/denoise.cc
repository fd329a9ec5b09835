// Copyright 2026 The sumdenoise Authors.
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

#include "sumdenoise/denoise.h"

#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <thread>

#include "sumdenoise/errors.h"

namespace sumdenoise {
namespace {

std::string_view Trim(std::string_view s) {
  const auto not_space = [](char c) {
    return c != ' ' && c != '\t' && c != '\r' && c != '\n';
  };
  while (!s.empty() && !not_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && !not_space(s.back())) s.remove_suffix(1);
  return s;
}

[[noreturn]] void ThrowErrno(const std::string& what) {
  throw Error(ErrorCode::kIoError, what + ": " + std::strerror(errno));
}

void WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return;  // EPIPE: child stopped reading; the line count check reports it
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

DenoiseResult overlap_denoise(const SummaryDoc& doc, double threshold) {
  validate_threshold(threshold);
  if (doc.empty()) {
    throw Error(ErrorCode::kEmptyDocument,
                "cannot denoise empty summary '" + doc.source_id + "'");
  }
  DenoiseResult result;
  result.output.source_id = doc.source_id;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const TokenizedSentence& candidate = doc.sentences[i];
    bool redundant = false;
    for (const TokenizedSentence& kept : result.output.sentences) {
      if (unigram_overlap(candidate, kept) > threshold) {
        redundant = true;
        break;
      }
    }
    if (redundant) {
      result.deleted_indices.push_back(i);
    } else {
      result.output.sentences.push_back(candidate);
    }
  }
  return result;
}

std::string encode_channel_line(const SummaryDoc& doc) {
  std::string line;
  for (const auto& s : doc.sentences) {
    if (s.raw().find(kSentenceSeparator) != std::string::npos ||
        s.raw().find('\n') != std::string::npos) {
      throw Error(ErrorCode::kProtocolViolation,
                  "record '" + doc.source_id +
                      "' has a sentence containing the separator or a newline");
    }
    if (!line.empty()) {
      line += ' ';
      line += kSentenceSeparator;
      line += ' ';
    }
    line += Trim(s.raw());
  }
  return line;
}

SummaryDoc decode_channel_line(std::string_view line, std::string source_id) {
  SummaryDoc doc;
  doc.source_id = std::move(source_id);
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t end = line.find(kSentenceSeparator, start);
    if (end == std::string_view::npos) end = line.size();
    std::string_view piece = Trim(line.substr(start, end - start));
    if (!piece.empty()) {
      try {
        doc.sentences.push_back(tokenize(piece));
      } catch (const Error&) {
        // Punctuation-only fragment; not a sentence.
      }
    }
    start = end + kSentenceSeparator.size();
  }
  if (doc.empty()) {
    throw Error(ErrorCode::kProtocolViolation,
                "record '" + doc.source_id + "': reply line has no sentences");
  }
  return doc;
}

std::vector<SummaryDoc> external_denoise(const std::vector<SummaryDoc>& docs,
                                         const LineChannel& channel) {
  std::vector<std::string> requests;
  requests.reserve(docs.size());
  for (const auto& doc : docs) requests.push_back(encode_channel_line(doc));
  const std::vector<std::string> replies = channel(requests);
  if (replies.size() != requests.size()) {
    const std::size_t first = std::min(replies.size(), requests.size());
    const std::string id =
        first < docs.size() ? docs[first].source_id : std::string("<extra>");
    throw Error(ErrorCode::kProtocolViolation,
                "expected " + std::to_string(requests.size()) + " lines, got " +
                    std::to_string(replies.size()) +
                    "; first unmatched record index " + std::to_string(first) +
                    " (id '" + id + "')");
  }
  std::vector<SummaryDoc> out;
  out.reserve(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i) {
    out.push_back(decode_channel_line(replies[i], docs[i].source_id));
  }
  return out;
}

std::vector<std::string> run_line_command(
    const std::string& command, const std::vector<std::string>& lines) {
  int to_child[2];
  int from_child[2];
  if (::pipe2(to_child, O_CLOEXEC) != 0) ThrowErrno("pipe");
  if (::pipe2(from_child, O_CLOEXEC) != 0) {
    ::close(to_child[0]);
    ::close(to_child[1]);
    ThrowErrno("pipe");
  }
  const pid_t pid = ::fork();
  if (pid < 0) ThrowErrno("fork");
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(to_child[0]);
  ::close(from_child[1]);

  // Writing on a separate thread keeps a child that echoes as it reads from
  // filling the stdout pipe while we are still blocked on its stdin.
  struct sigaction ignore_pipe {};
  struct sigaction previous {};
  ignore_pipe.sa_handler = SIG_IGN;
  ::sigaction(SIGPIPE, &ignore_pipe, &previous);
  std::thread writer([fd = to_child[1], &lines] {
    for (const auto& line : lines) {
      WriteAll(fd, line);
      WriteAll(fd, "\n");
    }
    ::close(fd);
  });

  std::string buffer;
  char chunk[65536];
  for (;;) {
    const ssize_t n = ::read(from_child[0], chunk, sizeof(chunk));
    if (n < 0 && errno == EINTR) continue;
    if (n <= 0) break;
    buffer.append(chunk, static_cast<std::size_t>(n));
  }
  ::close(from_child[0]);
  writer.join();
  ::sigaction(SIGPIPE, &previous, nullptr);

  int status = 0;
  while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw Error(ErrorCode::kProtocolViolation,
                "denoiser command '" + command + "' failed with status " +
                    std::to_string(WIFEXITED(status) ? WEXITSTATUS(status)
                                                     : -1));
  }

  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < buffer.size()) {
    std::size_t end = buffer.find('\n', start);
    if (end == std::string::npos) end = buffer.size();
    std::string line = buffer.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

LineChannel command_channel(std::string command) {
  return [command = std::move(command)](const std::vector<std::string>& lines) {
    return run_line_command(command, lines);
  };
}

}  // namespace sumdenoise
