// Copyright 2026 The vocwqa Authors.
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

// Command line front end: load, ask, repl, suite and serve.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "vocwqa/app.h"
#include "vocwqa/corpus.h"
#include "vocwqa/service.h"

namespace {

std::atomic<bool> g_reload{false};
std::atomic<bool> g_stop{false};

void PrintLoadReport(const vocwqa::Corpus& corpus, std::ostream& out) {
  const auto& r = corpus.report;
  out << "records loaded: " << r.records_loaded << "\n"
      << "entities: " << corpus.graph.entity_count() << "\n"
      << "triples: " << corpus.graph.triple_count() << " (" << r.inferred_triples
      << " inferred)\n";
  for (const auto& e : r.errors) {
    out << "error: line " << e.line << " " << e.message << "\n";
  }
  for (const auto& w : r.warnings) {
    out << "warning: line " << w.line << " " << w.message << "\n";
  }
  for (const auto& v : r.violations) out << "violation: " << v.message << "\n";
}

vocwqa::Corpus LoadOrDie(const std::string& path) {
  vocwqa::Corpus corpus = vocwqa::LoadCorpus(path);
  for (const auto& e : corpus.report.errors) {
    std::cerr << "warning: skipped line " << e.line << ": " << e.message << "\n";
  }
  return corpus;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vietnamese question answering over a course library"};
  app.require_subcommand(1);

  std::string corpus_path;
  bool explain = false;
  bool substring = false;

  auto* load = app.add_subcommand("load", "Validate a corpus and print a load report");
  load->add_option("--corpus", corpus_path, "Corpus file (JSON Lines)")->required();

  std::string question;
  auto* ask = app.add_subcommand("ask", "Answer one question");
  ask->add_option("question", question, "Question text")->required();
  ask->add_option("--corpus", corpus_path, "Corpus file (JSON Lines)")->required();
  ask->add_flag("--explain", explain, "Also print the parse tree and intent");
  ask->add_flag("--substring-match", substring, "Match literals as substrings");

  auto* repl = app.add_subcommand("repl", "Interactive question loop");
  repl->add_option("--corpus", corpus_path, "Corpus file (JSON Lines)")->required();
  repl->add_flag("--explain", explain, "Also print the parse tree and intent");
  repl->add_flag("--substring-match", substring, "Match literals as substrings");

  std::string suite_path;
  auto* suite = app.add_subcommand("suite", "Run a question suite and report the pass ratio");
  suite->add_option("--file", suite_path, "Suite file (JSON Lines)")->required();
  suite->add_option("--corpus", corpus_path, "Corpus file (JSON Lines)")->required();

  int port = 8080;
  std::string host = "127.0.0.1";
  std::string static_dir;
  auto* serve = app.add_subcommand("serve", "Serve the HTTP API (SIGHUP reloads the corpus)");
  serve->add_option("--corpus", corpus_path, "Corpus file (JSON Lines)")->required();
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--host", host, "Address to bind");
  serve->add_option("--static", static_dir, "Directory of static files to serve at /");

  CLI11_PARSE(app, argc, argv);

  vocwqa::AnswerConfig config;
  config.build.substring_match = substring;

  try {
    if (*load) {
      vocwqa::Corpus corpus = vocwqa::LoadCorpus(corpus_path);
      PrintLoadReport(corpus, std::cout);
      return corpus.report.ok() ? 0 : 1;
    }
    if (*ask) {
      vocwqa::Corpus corpus = LoadOrDie(corpus_path);
      vocwqa::AnswerReport report = vocwqa::Answer(question, corpus.graph, config);
      std::cout << vocwqa::FormatReport(report, explain);
      return report.status == vocwqa::AnswerStatus::kNoParse ? 2 : 0;
    }
    if (*repl) {
      vocwqa::Corpus corpus = LoadOrDie(corpus_path);
      vocwqa::RunRepl(std::cin, std::cout, corpus.graph, config, explain);
      return 0;
    }
    if (*suite) {
      vocwqa::Corpus corpus = LoadOrDie(corpus_path);
      auto entries = vocwqa::LoadSuite(suite_path);
      vocwqa::SuiteResult result = vocwqa::RunSuite(entries, corpus.graph, config);
      std::cout << vocwqa::FormatSuiteResult(result);
      return result.passed == result.total ? 0 : 1;
    }
    if (*serve) {
      vocwqa::KnowledgeBase kb(LoadOrDie(corpus_path));
      vocwqa::ServiceOptions options;
      options.host = host;
      options.port = port;
      options.config = config;
      if (!static_dir.empty()) options.static_dir = static_dir;
      vocwqa::Service service(kb, options);
      int bound = service.Bind();
      std::cout << "listening on http://" << host << ":" << bound << std::endl;
      std::signal(SIGHUP, [](int) { g_reload = true; });
      std::signal(SIGINT, [](int) { g_stop = true; });
      std::signal(SIGTERM, [](int) { g_stop = true; });
      service.Start();
      while (!g_stop) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
        if (g_reload.exchange(false)) {
          try {
            kb.Install(std::make_shared<const vocwqa::Corpus>(LoadOrDie(corpus_path)));
            std::cout << "corpus reloaded" << std::endl;
          } catch (const std::exception& e) {
            std::cerr << "reload failed, keeping the previous corpus: " << e.what() << "\n";
          }
        }
      }
      service.Stop();
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
