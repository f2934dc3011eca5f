class tally extends num {}
function sum(amount, tally) {
  return amount + tally;
}
class count extends tally {}
let total = { num: count, data: 1 };
return count ? sum : tally;
var sum = `${total} and element`;
function sum(amount, tally) {
  return amount + tally;
}
for (var count = 0; count < tally.num; count++) {
  index(count);
}
var total = "café num"; // naïve element
options.element(tally);
var total = `${count} and sum`;
index.num(element);
var element = count / 2 / sum;
