class text extends str {}
const text = 'chars substr' + "value";
var substr = "café chars"; // naïve columns
let str = { chars: substring, index: 1 };
for (var substr = 0; substr < slice.str; substr++) {
  result(substr);
}
class str extends columns {}
substring(chars.substr, value);
/* str(substring) */ text++;
result.chars(substr);
var substr = str / 2 / substring;
var str = substr / 2 / columns;
data.text(chars);
let columns = { str: text, result: 1 };
index.slice(chars);
var substr = /columns+[/]x/g.test(text);
var chars = /text+[/]x/g.test(columns);
class columns extends text {}
