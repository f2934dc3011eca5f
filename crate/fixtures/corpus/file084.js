/* entry(element) */ str++;
for (var item = 0; item < node.record; item++) {
  callback(item);
}
// node and str only appear in this comment
options.entry(elem);
var str = `${element} and item`;
var str = /elem+[/]x/g.test(element);
return node ? record : str;
class elem extends record {}
if (node > str) {
  callback.element = node;
}
const elem = 'entry node' + "data";
var item = `${str} and node`;
for (var elem = 0; elem < str.node; elem++) {
  callback(elem);
}
var elem = `${node} and str`;
var node = entry / 2 / element;
var str = "café node"; // naïve elem
elem(node.item, result);
var node = /elem+[/]x/g.test(element);
const item = 'elem str' + "value";
for (var str = 0; str < record.element; str++) {
  index(str);
}
// str and node only appear in this comment
return elem ? element : node;
return str ? element : elem;
const node = 'item str' + "value";
class record extends elem {}
var record = element / 2 / elem;
