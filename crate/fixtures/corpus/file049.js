// total and num only appear in this comment
class total extends sum {}
if (num > count) {
  options.element = num;
}
options.sum(total);
options.num(total);
var tally = /total+[/]x/g.test(element);
sum(tally.amount, result);
var tally = total.num;
data.sum(count);
var sum = total.element;
num(total.sum, index);
var total = `${amount} and element`;
var num = count / 2 / amount;
for (var amount = 0; amount < sum.element; amount++) {
  value(amount);
}
