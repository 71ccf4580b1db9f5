#include <doctest.h>

#include "samatch/xml.hpp"

using namespace samatch;

TEST_CASE("xml: elements, attributes, namespaces") {
    const auto root = xml::parse(R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:owl="http://www.w3.org/2002/07/owl#">
  <owl:Class rdf:about="#Paper">
    <label xmlns="http://www.w3.org/2000/01/rdf-schema#">A &amp; B</label>
  </owl:Class>
  <!-- a comment -->
  <owl:Class rdf:about="#Review"/>
</rdf:RDF>)");

    CHECK(root.local == "RDF");
    CHECK(root.ns == "http://www.w3.org/1999/02/22-rdf-syntax-ns#");
    REQUIRE(root.children.size() == 2);
    const auto& cls = root.children[0];
    CHECK(cls.ns == "http://www.w3.org/2002/07/owl#");
    CHECK(cls.local == "Class");
    REQUIRE(cls.attr("http://www.w3.org/1999/02/22-rdf-syntax-ns#", "about"));
    CHECK(*cls.attr("http://www.w3.org/1999/02/22-rdf-syntax-ns#", "about") == "#Paper");
    REQUIRE(cls.children.size() == 1);
    CHECK(cls.children[0].ns == "http://www.w3.org/2000/01/rdf-schema#");
    CHECK(cls.children[0].text == "A & B");
}

TEST_CASE("xml: character and doctype entities") {
    const auto root = xml::parse(R"(<!DOCTYPE rdf:RDF [
  <!ENTITY base "http://x.example/onto">
]>
<doc attr="&base;#Paper">&#65;&lt;&gt;&quot;&apos;&#x42;</doc>)");
    CHECK(root.local == "doc");
    CHECK(*root.attr("", "attr") == "http://x.example/onto#Paper");
    CHECK(root.text == "A<>\"'B");
}

TEST_CASE("xml: cdata") {
    const auto root = xml::parse("<d><![CDATA[<not-markup>]]></d>");
    CHECK(root.text == "<not-markup>");
}

TEST_CASE("xml: malformed documents are rejected") {
    CHECK_THROWS_AS(xml::parse("<a><b></a></b>"), MalformedInput);
    CHECK_THROWS_AS(xml::parse("<a>"), MalformedInput);
    CHECK_THROWS_AS(xml::parse("plain text"), MalformedInput);
    CHECK_THROWS_AS(xml::parse("<a attr=value/>"), MalformedInput);
    CHECK_THROWS_AS(xml::parse("<a>&undefined;</a>"), MalformedInput);
    CHECK_THROWS_AS(xml::parse("<a/><b/>"), MalformedInput);
}

TEST_CASE("xml: escape round-trips through the parser") {
    const std::string raw = "a<b>&c\"d'e";
    const auto root = xml::parse("<x attr=\"" + xml::escape(raw) + "\">" + xml::escape(raw) + "</x>");
    CHECK(root.text == raw);
    CHECK(*root.attr("", "attr") == raw);
}
