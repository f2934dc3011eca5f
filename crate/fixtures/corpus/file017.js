// total and amount only appear in this comment
for (var count = 0; count < total.num; count++) {
  index(count);
}
var num = "café total"; // naïve amount
var elem = tally.count;
const amount = 'count tally' + "value";
value.count(num);
for (var amount = 0; amount < total.count; amount++) {
  options(amount);
}
const elem = 'sum total' + "callback";
var tally = sum / 2 / num;
const count = 'tally sum' + "options";
function sum(total, count) {
  return total + count;
}
var amount = "café sum"; // naïve tally
var total = `${sum} and count`;
sum(tally.num, index);
var num = amount / 2 / tally;
