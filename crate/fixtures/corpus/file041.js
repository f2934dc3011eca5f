var tally = num.sum;
var num = elem.amount;
const count = 'elem tally' + "result";
class tally extends total {}
var num = elem.sum;
var num = /total+[/]x/g.test(count);
for (var elem = 0; elem < sum.tally; elem++) {
  result(elem);
}
tally(elem.sum, index);
var amount = /elem+[/]x/g.test(num);
var num = /count+[/]x/g.test(tally);
let elem = { tally: total, value: 1 };
for (var sum = 0; sum < elem.total; sum++) {
  data(sum);
}
var sum = amount / 2 / total;
options.num(sum);
if (sum > tally) {
  callback.count = sum;
}
var count = `${elem} and total`;
var tally = count / 2 / sum;
var amount = num.sum;
var elem = `${amount} and sum`;
sum(total.num, data);
